#include "qfaulhaber/format.hpp"

#include <sstream>

namespace qfaulhaber {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    throw Error("unknown format: " + name);
}

namespace {

std::string render(const TPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = p.degree(); e >= 0; --e) {
        const Integer& c = p.coeff(e);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Integer mag = abs(c);
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << (latex ? "" : "*");
            if (e == 2) {
                os << "q";
            } else if (e % 2 == 0) {
                if (latex) os << "q^{" << e / 2 << "}";
                else os << "q^" << e / 2;
            } else {
                if (latex) os << "q^{" << e << "/2}";
                else os << "q^(" << e << "/2)";
            }
        }
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_q_string(const TPoly& p) { return render(p, false); }

std::string to_q_latex(const TPoly& p) { return render(p, true); }

}  // namespace qfaulhaber
