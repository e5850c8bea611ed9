#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charsum/bigint.hpp"
#include "charsum/error.hpp"
#include "charsum/partition.hpp"
#include "charsum/polyring.hpp"

namespace charsum {

using CharValue = bigint;

/// Sparse Laurent polynomial in m variables: exponent vector -> coefficient.
/// Zero coefficients are never stored.
class MultiLaurent {
public:
    using exponents = std::vector<int>;

    explicit MultiLaurent(std::size_t nvars) : nvars_(nvars) {}

    static MultiLaurent constant(std::size_t nvars, const bigint& c) {
        MultiLaurent r(nvars);
        r.add_term(exponents(nvars, 0), c);
        return r;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<exponents, bigint>& terms() const noexcept { return terms_; }

    void add_term(const exponents& e, const bigint& c) {
        if (e.size() != nvars_) throw precondition_error("exponent vector has wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bigint coeff(const exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? bigint(0) : it->second;
    }

    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
        if (a.nvars_ != b.nvars_) throw precondition_error("variable count mismatch");
        MultiLaurent r(a.nvars_);
        exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

private:
    std::size_t nvars_;
    std::map<exponents, bigint> terms_;
};

/// Coefficient of x_1^0 ... x_m^0.
inline bigint ct_multivariate(const MultiLaurent& f) {
    return f.coeff(MultiLaurent::exponents(f.nvars(), 0));
}

inline constexpr std::size_t default_row_cap = 4;

/// Character value as the constant term of
///   prod_{i<j} (1 - x_j/x_i) * prod_k (sum_i x_i^{mu_k}) / prod_i x_i^{lambda_i}
/// in m = length(lambda) variables. Rows beyond row_cap are refused because
/// the expansion grows like m^length(mu); use char_mn for those.
inline CharValue char_ct(const Partition& lambda, const Partition& mu, std::size_t row_cap = default_row_cap) {
    if (lambda.weight() != mu.weight()) {
        throw precondition_error("weight mismatch: |lambda| = " + std::to_string(lambda.weight()) +
                                 ", |mu| = " + std::to_string(mu.weight()));
    }
    const std::size_t m = lambda.length();
    if (m > row_cap) {
        throw precondition_error("lambda has " + std::to_string(m) + " rows, above the constant-term cap of " +
                                 std::to_string(row_cap) + "; use char_mn instead");
    }
    if (m == 0) return 1;

    using exps = MultiLaurent::exponents;
    MultiLaurent f = MultiLaurent::constant(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            MultiLaurent factor = MultiLaurent::constant(m, 1);
            exps e(m, 0);
            e[j] = 1;
            e[i] = -1;
            factor.add_term(e, -1);
            f = f * factor;
        }
    }
    for (int part : mu.parts()) {
        MultiLaurent power_sum(m);
        for (std::size_t i = 0; i < m; ++i) {
            exps e(m, 0);
            e[i] = part;
            power_sum.add_term(e, 1);
        }
        f = f * power_sum;
    }
    MultiLaurent denom(m);
    exps e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = -lambda[i];
    denom.add_term(e, 1);
    return ct_multivariate(f * denom);
}

/// P(x) = (1 - x) (1 + x)^{n - |mu0|} prod_i (1 + x^{a_i}). Its coefficient
/// c_j is chi^{(n-j,j)}(mu0 1^{n-|mu0|}) for j <= n/2; degree is n + 1.
inline IntPoly two_row_gen_poly(const Partition& mu0, int n) {
    if (mu0.has_part_one()) throw precondition_error("mu0 must not contain a part equal to 1");
    if (n < mu0.weight()) {
        throw precondition_error("n = " + std::to_string(n) + " is below |mu0| = " + std::to_string(mu0.weight()));
    }
    IntPoly p = IntPoly{1, -1} * one_plus_x_pow(n - mu0.weight());
    for (int a : mu0.parts()) p *= IntPoly::constant(1) + IntPoly::monomial(static_cast<std::size_t>(a));
    return p;
}

/// c_j of two_row_gen_poly(mu0, n), for 0 <= j <= n + 1. For j > n/2 this is
/// the formal extension (c_j = -c_{n+1-j}), not a character.
inline CharValue char_two_row(int n, int j, const Partition& mu0) {
    if (j < 0 || j > n + 1) {
        throw precondition_error("j = " + std::to_string(j) + " outside [0, " + std::to_string(n + 1) + "]");
    }
    return two_row_gen_poly(mu0, n).coeff(j);
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: a rim hook of length k is a bead moving
// from b to an empty position b - k >= 0; its height is the number of beads
// jumped over.
inline CharValue mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t next,
                        std::map<std::vector<int>, CharValue>& memo) {
    if (next == mu.size()) return 1; // lambda is empty here, weights agree

    std::vector<int> key = lambda;
    key.push_back(0);
    key.insert(key.end(), mu.begin() + static_cast<long>(next), mu.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
    // beta is strictly decreasing

    const int k = mu[next];
    CharValue total = 0;
    for (int i = 0; i < len; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - k;
        if (to < 0) continue;
        if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta) {
            if (b > to && b < from) ++jumped;
        }
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = to;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> smaller;
        for (int r = 0; r < len; ++r) {
            const int part = nb[static_cast<std::size_t>(r)] - (len - 1 - r);
            if (part > 0) smaller.push_back(part);
        }
        CharValue sub = mn_rec(smaller, mu, next + 1, memo);
        if (jumped % 2) total -= sub; else total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

inline std::map<std::vector<int>, CharValue>& mn_memo() {
    thread_local std::map<std::vector<int>, CharValue> memo;
    return memo;
}

} // namespace detail

/// chi^lambda(mu) by the Murnaghan-Nakayama rule, memoized per thread.
/// Parts of mu are stripped largest first, so 1-cycles go last.
inline CharValue char_mn(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) {
        throw precondition_error("weight mismatch: |lambda| = " + std::to_string(lambda.weight()) +
                                 ", |mu| = " + std::to_string(mu.weight()));
    }
    return detail::mn_rec(lambda.parts(), mu.parts(), 0, detail::mn_memo());
}

inline void clear_mn_memo() { detail::mn_memo().clear(); }

} // namespace charsum
