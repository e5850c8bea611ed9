#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "charsum/bigint.hpp"
#include "charsum/error.hpp"

namespace charsum {

/// Dense univariate polynomial over Z. Index k of coeffs() is the
/// coefficient of x^k; there are never trailing zeros, so the zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> cs) : coeffs_(cs.begin(), cs.end()) { trim(); }
    explicit IntPoly(std::vector<bigint> cs) : coeffs_(std::move(cs)) { trim(); }

    static IntPoly constant(const bigint& c) { return IntPoly(std::vector<bigint>{c}); }

    /// c * x^k
    static IntPoly monomial(std::size_t k, const bigint& c = 1) {
        std::vector<bigint> cs(k + 1);
        cs[k] = c;
        return IntPoly(std::move(cs));
    }

    const std::vector<bigint>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of x^k; zero outside the support (including k < 0).
    bigint coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    // Schoolbook convolution.
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<bigint> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
            }
        }
        return IntPoly(std::move(out));
    }

    friend IntPoly operator*(const bigint& s, IntPoly a) {
        if (s == 0) return {};
        for (auto& c : a.coeffs_) c *= s;
        return a;
    }

    bool operator==(const IntPoly&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<bigint> coeffs_;
};

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

/// a^e by repeated squaring; a^0 == 1 (also for a == 0).
inline IntPoly poly_pow(IntPoly a, long e) {
    if (e < 0) throw precondition_error("poly_pow needs a non-negative exponent; use binomial_series");
    IntPoly r = IntPoly::constant(1);
    while (e > 0) {
        if (e & 1) r *= a;
        e >>= 1;
        if (e) a *= a;
    }
    return r;
}

/// (1 + x)^e for e >= 0.
inline IntPoly one_plus_x_pow(long e) {
    if (e < 0) throw precondition_error("one_plus_x_pow needs a non-negative exponent");
    std::vector<bigint> cs(static_cast<std::size_t>(e) + 1);
    for (long k = 0; k <= e; ++k) cs[static_cast<std::size_t>(k)] = binomial(static_cast<unsigned long>(e), static_cast<unsigned long>(k));
    return IntPoly(std::move(cs));
}

inline bigint coeff(const IntPoly& p, long k) { return p.coeff(k); }

/// "c0 + c1*x + c2*x^2"; zero terms omitted, "0" for the zero polynomial.
inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = 0; k <= p.degree(); ++k) {
        const bigint& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += c.get_str();
        if (k == 1) out += "*x";
        if (k > 1) out += "*x^" + std::to_string(k);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

/// x^shift * base.
struct LaurentPoly {
    IntPoly base;
    long shift = 0;

    bigint coeff(long k) const { return base.coeff(k - shift); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return {a.base * b.base, a.shift + b.shift};
    }
};

inline bigint coeff(const LaurentPoly& p, long k) { return p.coeff(k); }

/// p(1/x) as a Laurent polynomial.
inline LaurentPoly reflect(const IntPoly& p) {
    std::vector<bigint> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return {IntPoly(std::move(rev)), -p.degree()};
}

/// Power series truncated after x^order. Products never carry terms past order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw precondition_error("truncation order must be >= 0");
    }

    long order() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    const bigint& operator[](long k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    bigint& operator[](long k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    bigint coeff(long k) const {
        if (k < 0 || k > order()) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    static TruncatedSeries from_poly(const IntPoly& p, long order) {
        TruncatedSeries s(order);
        for (long k = 0; k <= std::min(order, p.degree()); ++k) s[k] = p.coeff(k);
        return s;
    }

    /// Result order is the smaller of the two orders.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.order(), b.order()));
        for (long i = 0; i <= out.order(); ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; i + j <= out.order(); ++j) {
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
        return out;
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<bigint> coeffs_;
};

/// (1 + x)^e through x^order, for any integer e. The generalized binomial
/// coefficients C(e, k) are integers, so no rationals are needed.
inline TruncatedSeries binomial_series(long e, long order) {
    TruncatedSeries s(order);
    bigint c = 1;
    for (long k = 0; k <= order; ++k) {
        s[k] = c;
        c *= (e - k);
        c /= (k + 1); // exact
    }
    return s;
}

/// Coefficient of x^k in (1 + x)^e * q(x), for any integer e. A negative e
/// is read as a formal power series, truncated at order k (all that can
/// reach x^k since q has no negative powers).
inline bigint coeff_binomial_times(long e, const IntPoly& q, long k) {
    if (k < 0) return 0;
    bigint sum = 0;
    if (e >= 0) {
        for (long i = 0; i <= std::min(k, q.degree()); ++i) {
            if (k - i > e) continue;
            sum += q.coeff(i) * binomial(static_cast<unsigned long>(e), static_cast<unsigned long>(k - i));
        }
        return sum;
    }
    const TruncatedSeries s = binomial_series(e, k);
    for (long i = 0; i <= std::min(k, q.degree()); ++i) sum += q.coeff(i) * s[k - i];
    return sum;
}

/// prod_{j=0}^{t-1} (1 + x^{2^j}); times (1 - x) this is 1 - x^{2^t}.
inline IntPoly euler_product(int t) {
    if (t < 1) throw precondition_error("euler_product needs t >= 1");
    IntPoly r = IntPoly::constant(1);
    for (int j = 0; j < t; ++j) r *= IntPoly::constant(1) + IntPoly::monomial(std::size_t{1} << j);
    return r;
}

/// coeff(j) == -coeff(d - j) for all j, d = degree. Vacuously true for 0.
inline bool is_antipalindromic(const IntPoly& p) {
    const long d = p.degree();
    for (long j = 0; j <= d; ++j) {
        if (p.coeff(j) != -p.coeff(d - j)) return false;
    }
    return true;
}

} // namespace charsum
