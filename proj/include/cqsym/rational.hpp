#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cqsym {

// Exact rational coefficients. mpq_class does not canonicalize a (num,den)
// pair on construction, so all construction from fractions goes through here.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rational is not an integer");
    return static_cast<long>(r.get_num().get_si());
}

// Canonical string form: "p" or "p/q" with q > 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace cqsym
