#pragma once

#include <cstdint>
#include <vector>

#include "qfaulhaber/tpoly.hpp"
#include "qfaulhaber/verdict.hpp"

namespace qfaulhaber {

struct LatticePoint {
    int x = 0;
    int y = 0;

    friend bool operator==(LatticePoint a, LatticePoint b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(LatticePoint a, LatticePoint b) { return !(a == b); }
    friend bool operator<(LatticePoint a, LatticePoint b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

enum class Step : std::uint8_t {
    East,   // x + 1
    North,  // y + 1
};

/// Monotone lattice path: a start point plus East/North steps.
struct LatticePath {
    LatticePoint start;
    std::vector<Step> steps;

    LatticePoint end() const;
    int north_count() const;
    /// Every lattice point visited, start and end included.
    std::vector<LatticePoint> points() const;
};

/// Which x-parity of a North step carries weight q; all other steps have
/// weight 1.
enum class WeightParity {
    Even,
    Odd,
};

struct Endpoints {
    std::vector<LatticePoint> starts;
    std::vector<LatticePoint> ends;
};

/// Start points (2i, -2i) and end points (2j+3, m-k-1-j) for 0 <= i, j < k,
/// paired in order. Throws IndexOutOfRange unless 1 <= k <= m.
Endpoints endpoints(int m, int k);

/// All monotone East/North paths from a to b; empty when b is not weakly
/// north-east of a.
std::vector<LatticePath> enumerate_paths(LatticePoint a, LatticePoint b);

/// Number of North steps of p taken at an x-coordinate of the marked parity.
int path_weight_exponent(const LatticePath& p, WeightParity w);

/// Monomial q^c with c = path_weight_exponent(p, w).
QPoly path_weight(const LatticePath& p, WeightParity w);

/// Sum of path_weight over all monotone paths from a to b, computed by
/// dynamic programming over the grid (no enumeration).
QPoly weighted_path_count(LatticePoint a, LatticePoint b, WeightParity w);

/// Determinant of the k x k matrix (weighted_path_count(start_i, end_j)).
QPoly lgv_determinant(int m, int k, WeightParity w);

/// Sum of family weights over all vertex-disjoint k-tuples of paths
/// (path i runs start_i -> end_i). Throws BudgetExceeded when the tuple
/// count (product of pairwise path counts) exceeds the budget.
QPoly bruteforce_family_sum(int m, int k, WeightParity w, std::uint64_t budget = 1'000'000);

/// Checks (a) that every pairwise weighted_path_count is identical under the
/// even and odd conventions, and (b) that for every vertex-disjoint family
/// the even and odd weight exponents sum to the family's total number of
/// North steps. Throws BudgetExceeded like bruteforce_family_sum.
Verdict involution_check(int m, int k, std::uint64_t budget = 1'000'000);

}  // namespace qfaulhaber
