#pragma once

#include <gmpxx.h>

#include <string>

#include "simplie/core/report.hpp"

namespace simplie {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) as long as arithmetic goes through its operators.
using Rat = mpq_class;

// Strict parser for the serialized forms "p", "-p", "p/q", "-p/q"
// (decimal digits only, no whitespace, no leading '+').
inline Rat parse_rational(const std::string& s) {
    auto fail = [&]() -> Rat {
        throw InputError("malformed rational '" + s + "' (expected p or p/q)");
    };
    if (s.empty()) return fail();
    size_t i = 0;
    if (s[0] == '-') i = 1;
    size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    if (digits == 0) return fail();
    if (i != s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        size_t qdigits = 0, qstart = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++qdigits;
        if (qdigits == 0 || i != s.size()) return fail();
        if (s.find_first_not_of('0', qstart) == std::string::npos)
            throw InputError("zero denominator in rational '" + s + "'");
    }
    Rat r;
    if (r.set_str(s, 10) != 0) return fail();
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rat& r) {
    return r.get_str();  // canonical "p" or "p/q", denominator > 0
}

}  // namespace simplie
