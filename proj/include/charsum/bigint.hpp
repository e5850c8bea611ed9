#pragma once

#include <gmpxx.h>

#include <string>

namespace charsum {

using bigint = mpz_class;
using rational = mpq_class;

inline std::string to_string(const bigint& v) { return v.get_str(); }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const rational& v) {
    rational c = v;
    c.canonicalize();
    return c.get_str();
}

inline bigint binomial(unsigned long n, unsigned long k) {
    bigint r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bigint factorial(unsigned long n) {
    bigint r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace charsum
