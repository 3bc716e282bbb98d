#include "qfaulhaber/lgv.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "qfaulhaber/matrix.hpp"
#include "qfaulhaber/qcombinatorics.hpp"

namespace qfaulhaber {

LatticePoint LatticePath::end() const {
    LatticePoint p = start;
    for (Step s : steps) {
        if (s == Step::East) ++p.x;
        else ++p.y;
    }
    return p;
}

int LatticePath::north_count() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), Step::North));
}

std::vector<LatticePoint> LatticePath::points() const {
    std::vector<LatticePoint> pts;
    pts.reserve(steps.size() + 1);
    LatticePoint p = start;
    pts.push_back(p);
    for (Step s : steps) {
        if (s == Step::East) ++p.x;
        else ++p.y;
        pts.push_back(p);
    }
    return pts;
}

Endpoints endpoints(int m, int k) {
    if (k < 1 || k > m) throw IndexOutOfRange("endpoints: need 1 <= k <= m");
    Endpoints e;
    e.starts.reserve(static_cast<std::size_t>(k));
    e.ends.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        e.starts.push_back({2 * i, -2 * i});
        e.ends.push_back({2 * i + 3, m - k - 1 - i});
    }
    return e;
}

std::vector<LatticePath> enumerate_paths(LatticePoint a, LatticePoint b) {
    const int dx = b.x - a.x, dy = b.y - a.y;
    if (dx < 0 || dy < 0) return {};
    std::vector<LatticePath> out;
    std::vector<Step> steps(static_cast<std::size_t>(dx + dy));
    std::function<void(int, int, int)> rec = [&](int pos, int east_left, int north_left) {
        if (pos == dx + dy) {
            out.push_back(LatticePath{a, steps});
            return;
        }
        if (east_left > 0) {
            steps[static_cast<std::size_t>(pos)] = Step::East;
            rec(pos + 1, east_left - 1, north_left);
        }
        if (north_left > 0) {
            steps[static_cast<std::size_t>(pos)] = Step::North;
            rec(pos + 1, east_left, north_left - 1);
        }
    };
    rec(0, dx, dy);
    return out;
}

namespace {

int parity_of(WeightParity w) { return w == WeightParity::Even ? 0 : 1; }

// C-style modulus of x by 2 that is nonnegative for negative x.
int xparity(int x) { return ((x % 2) + 2) % 2; }

}  // namespace

int path_weight_exponent(const LatticePath& p, WeightParity w) {
    const int marked = parity_of(w);
    int c = 0, x = p.start.x;
    for (Step s : p.steps) {
        if (s == Step::East) ++x;
        else if (xparity(x) == marked) ++c;
    }
    return c;
}

QPoly path_weight(const LatticePath& p, WeightParity w) {
    return QPoly(TPoly::monomial(1, 2 * path_weight_exponent(p, w)));
}

QPoly weighted_path_count(LatticePoint a, LatticePoint b, WeightParity w) {
    const int dx = b.x - a.x, dy = b.y - a.y;
    if (dx < 0 || dy < 0) return QPoly{};
    const int marked = parity_of(w);
    // W[j] holds the generating function for reaching (a.x + i, a.y + j)
    // while sweeping columns i left to right.
    std::vector<TPoly> col(static_cast<std::size_t>(dy) + 1);
    for (int i = 0; i <= dx; ++i) {
        const bool weighted = xparity(a.x + i) == marked;
        for (int j = 0; j <= dy; ++j) {
            TPoly& cell = col[static_cast<std::size_t>(j)];
            if (i == 0 && j == 0) {
                cell = TPoly(1);
                continue;
            }
            // East contribution is the previous column value already in place.
            if (j > 0) {
                TPoly up = col[static_cast<std::size_t>(j - 1)];
                cell += weighted ? up.shifted(2) : up;
            }
        }
    }
    return QPoly(col[static_cast<std::size_t>(dy)]);
}

QPoly lgv_determinant(int m, int k, WeightParity w) {
    Endpoints e = endpoints(m, k);
    PolyMatrix<QPoly> a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                weighted_path_count(e.starts[static_cast<std::size_t>(i)],
                                    e.ends[static_cast<std::size_t>(j)], w);
    return det_bareiss(std::move(a));
}

namespace {

struct PreparedPath {
    std::vector<LatticePoint> points;  // sorted
    int exp_even = 0;
    int exp_odd = 0;
    int norths = 0;
};

bool disjoint(const PreparedPath& a, const PreparedPath& b) {
    auto i = a.points.begin();
    auto j = b.points.begin();
    while (i != a.points.end() && j != b.points.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i;
        else ++j;
    }
    return true;
}

// Enumerates every vertex-disjoint family for (m, k) and feeds it to fn.
// Throws BudgetExceeded before enumerating if the raw tuple count (product
// of pairwise path counts) exceeds the budget.
void for_each_disjoint_family(int m, int k, std::uint64_t budget,
                              const std::function<void(const std::vector<const PreparedPath*>&)>& fn) {
    Endpoints e = endpoints(m, k);
    Integer tuples = 1;
    for (int i = 0; i < k; ++i) {
        const LatticePoint a = e.starts[static_cast<std::size_t>(i)];
        const LatticePoint b = e.ends[static_cast<std::size_t>(i)];
        const int dx = b.x - a.x, dy = b.y - a.y;
        tuples *= (dx < 0 || dy < 0) ? Integer(0) : binomial(dx + dy, dy);
        if (tuples == 0) return;
    }
    if (tuples > budget) {
        std::ostringstream os;
        os << "brute force for m=" << m << " k=" << k << " needs " << tuples.get_str()
           << " tuples, budget is " << budget;
        throw BudgetExceeded(os.str());
    }
    std::vector<std::vector<PreparedPath>> prepared(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (const LatticePath& p : enumerate_paths(e.starts[static_cast<std::size_t>(i)],
                                                    e.ends[static_cast<std::size_t>(i)])) {
            PreparedPath pp;
            pp.points = p.points();
            std::sort(pp.points.begin(), pp.points.end());
            pp.exp_even = path_weight_exponent(p, WeightParity::Even);
            pp.exp_odd = path_weight_exponent(p, WeightParity::Odd);
            pp.norths = p.north_count();
            prepared[static_cast<std::size_t>(i)].push_back(std::move(pp));
        }
    }
    std::vector<const PreparedPath*> family(static_cast<std::size_t>(k));
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            fn(family);
            return;
        }
        for (const PreparedPath& cand : prepared[static_cast<std::size_t>(i)]) {
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (!disjoint(*family[static_cast<std::size_t>(j)], cand)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            family[static_cast<std::size_t>(i)] = &cand;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

QPoly bruteforce_family_sum(int m, int k, WeightParity w, std::uint64_t budget) {
    std::vector<Integer> counts;
    for_each_disjoint_family(m, k, budget, [&](const std::vector<const PreparedPath*>& family) {
        int exponent = 0;
        for (const PreparedPath* p : family)
            exponent += (w == WeightParity::Even) ? p->exp_even : p->exp_odd;
        if (static_cast<std::size_t>(exponent) >= counts.size())
            counts.resize(static_cast<std::size_t>(exponent) + 1, Integer(0));
        counts[static_cast<std::size_t>(exponent)] += 1;
    });
    return QPoly::from_q_coeffs(counts);
}

Verdict involution_check(int m, int k, std::uint64_t budget) {
    Endpoints e = endpoints(m, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const LatticePoint a = e.starts[static_cast<std::size_t>(i)];
            const LatticePoint b = e.ends[static_cast<std::size_t>(j)];
            QPoly even = weighted_path_count(a, b, WeightParity::Even);
            QPoly odd = weighted_path_count(a, b, WeightParity::Odd);
            if (even != odd) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ") differs between conventions";
                return Verdict::fail(os.str());
            }
        }
    bool duality_ok = true;
    int bad_even = 0, bad_odd = 0, bad_norths = 0;
    for_each_disjoint_family(m, k, budget, [&](const std::vector<const PreparedPath*>& family) {
        int even = 0, odd = 0, norths = 0;
        for (const PreparedPath* p : family) {
            even += p->exp_even;
            odd += p->exp_odd;
            norths += p->norths;
        }
        if (even + odd != norths && duality_ok) {
            duality_ok = false;
            bad_even = even;
            bad_odd = odd;
            bad_norths = norths;
        }
    });
    if (!duality_ok) {
        std::ostringstream os;
        os << "family with even exponent " << bad_even << " and odd exponent " << bad_odd
           << " does not sum to " << bad_norths << " North steps";
        return Verdict::fail(os.str());
    }
    return Verdict::ok();
}

}  // namespace qfaulhaber
