#pragma once

// The intermediate constant-termands of the theorem's proof, written out
// separately so each rewriting step can be checked as an exact identity.

#include <numeric>
#include <vector>

#include "charsum/polyring.hpp"

namespace charsum::proof {

inline IntPoly one_plus_monomial(long k) { return IntPoly::constant(1) + IntPoly::monomial(static_cast<std::size_t>(k)); }

inline long sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

// 2 + 4 + ... + 2^{t-1}
inline long run_weight(int t) { return (1L << t) - 2; }

// (1+x)^{2(n - sum a - sum_{j=1}^{t-1} 2^j)} prod_{j=1}^{t-1} (1+x^{2^j})^2
inline IntPoly before_transfer(const std::vector<int>& odd, int t, long n) {
    IntPoly p = one_plus_x_pow(2 * (n - sum_of(odd) - run_weight(t)));
    for (int j = 1; j <= t - 1; ++j) p *= poly_pow(one_plus_monomial(1L << j), 2);
    return p;
}

// (1+x)^{2(n - sum a - 1 - sum_{j=1}^{t-1} 2^j)} prod_{j=0}^{t-1} (1+x^{2^j})^2
inline IntPoly after_transfer(const std::vector<int>& odd, int t, long n) {
    IntPoly p = one_plus_x_pow(2 * (n - sum_of(odd) - 1 - run_weight(t)));
    for (int j = 0; j <= t - 1; ++j) p *= poly_pow(one_plus_monomial(1L << j), 2);
    return p;
}

inline IntPoly odd_square_product(const std::vector<int>& odd) {
    IntPoly p = IntPoly::constant(1);
    for (int a : odd) p *= poly_pow(one_plus_monomial(a), 2);
    return p;
}

// -Coeff_{x^{n+1}} [ (1-x)^2 (1+x)^{2(n-|mu0|-1)} prod_{j=0}^{t-1}(1+x^{2^j})^2 prod (1+x^a)^2 ]
// (twice A after the factor transfer, before Euler's telescoping)
inline bigint twice_A_after_transfer(const std::vector<int>& odd, int t, long n) {
    IntPoly q = poly_pow(IntPoly{1, -1}, 2) * odd_square_product(odd);
    for (int j = 0; j <= t - 1; ++j) q *= poly_pow(one_plus_monomial(1L << j), 2);
    const long e = 2 * (n - sum_of(odd) - 1 - run_weight(t));
    return -coeff_binomial_times(e, q, n + 1);
}

// -Coeff_{x^{n+1}} [ (1-x^{2^t})^2 (1+x)^{2(n-|mu0|-1)} prod (1+x^a)^2 ]
// (twice A after Euler's telescoping)
inline bigint twice_A_after_euler(const std::vector<int>& odd, int t, long n) {
    const IntPoly q = poly_pow(IntPoly::constant(1) - IntPoly::monomial(std::size_t{1} << t), 2) * odd_square_product(odd);
    const long e = 2 * (n - sum_of(odd) - 1 - run_weight(t));
    return -coeff_binomial_times(e, q, n + 1);
}

// B(mu0')(n+2) = -Coeff_{x^{n+1}} [ (1+x)^{2n+2-2(sum a + 2^t)} (x^{2^t}-1)^2 prod (x^a+1)^2 ]
inline bigint B_companion_proof_form(const std::vector<int>& odd, int t, long n) {
    const IntPoly q = poly_pow(IntPoly::monomial(std::size_t{1} << t) - IntPoly::constant(1), 2) * odd_square_product(odd);
    const long e = 2 * n + 2 - 2 * (sum_of(odd) + (1L << t));
    return -coeff_binomial_times(e, q, n + 1);
}

} // namespace charsum::proof
