#pragma once

#include <string>

namespace qfaulhaber {

/// Outcome of an exact identity check. A failed verdict carries the
/// counterexample rendered into `detail`; a passing one may carry notes
/// (e.g. values recorded without assertion).
struct Verdict {
    bool pass = true;
    std::string detail;

    explicit operator bool() const { return pass; }

    static Verdict ok(std::string note = {}) { return {true, std::move(note)}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

}  // namespace qfaulhaber
