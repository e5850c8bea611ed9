#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "charsum/bigint.hpp"
#include "charsum/charsums.hpp"
#include "charsum/error.hpp"
#include "charsum/parallel.hpp"
#include "charsum/partition.hpp"

namespace charsum {

// ---------------------------------------------------------------------------
// Constant-ratio pairs
// ---------------------------------------------------------------------------

struct TheoremPair {
    Partition mu0;
    Partition mu0_prime;
    rational ratio;
    int n_lo = 0;
    int n_hi = 0;
    bool theorem_predicted = false;

    bool operator==(const TheoremPair&) const = default;
};

namespace detail {

inline void check_pair_args(const Partition& mu0, const Partition& mu0p, int n_lo, int n_hi) {
    if (mu0p.weight() != mu0.weight() + 2) {
        throw precondition_error("|mu0'| must equal |mu0| + 2 (got " + std::to_string(mu0p.weight()) + " and " +
                                 std::to_string(mu0.weight()) + ")");
    }
    if (mu0.has_part_one() || mu0p.has_part_one()) throw precondition_error("parts equal to 1 are not allowed");
    if (n_lo < mu0.weight()) throw precondition_error("n_lo is below |mu0|");
    if (n_hi - n_lo < 3) throw precondition_error("ratio window must span at least 4 values of n");
}

// Common ratio of a[i] / b[i] by cross-multiplication; absent when the
// ratio varies, when some b is 0 with a nonzero, or when b is identically 0.
inline std::optional<rational> constant_ratio(const std::vector<bigint>& a, const std::vector<bigint>& b) {
    std::size_t ref = a.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] != 0) {
            ref = i;
            break;
        }
    }
    if (ref == a.size()) return std::nullopt;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] == 0 && a[i] != 0) return std::nullopt;
        if (a[i] * b[ref] != b[i] * a[ref]) return std::nullopt;
    }
    rational r(a[ref], b[ref]);
    r.canonicalize();
    return r;
}

} // namespace detail

/// The exact constant value of A(mu0)(n) / B(mu0')(n+2) over [n_lo, n_hi],
/// if there is one.
inline std::optional<rational> ratio_test(const Partition& mu0, const Partition& mu0p, int n_lo, int n_hi) {
    detail::check_pair_args(mu0, mu0p, n_lo, n_hi);
    std::vector<bigint> a, b;
    for (int n = n_lo; n <= n_hi; ++n) {
        a.push_back(sum_A(mu0, n));
        b.push_back(sum_B(mu0p, n + 2));
    }
    return detail::constant_ratio(a, b);
}

/// Every (mu0, mu0') with |mu0| <= K, |mu0'| = |mu0| + 2, no parts equal to 1,
/// whose ratio A(mu0)(n) / B(mu0')(n+2) is constant for n in
/// [|mu0|, |mu0| + window]. Ordered by |mu0|, then mu0 in enumeration order,
/// then mu0' in enumeration order, independent of `jobs`.
inline std::vector<TheoremPair> search_pairs(int K, int window, unsigned jobs = 1) {
    if (K < 0) throw precondition_error("K must be >= 0");
    if (window < 3) throw precondition_error("window must be >= 3");

    struct Task {
        Partition mu0;
        Partition mu0p;
    };
    std::vector<Task> tasks;
    for (int w = 0; w <= K; ++w) {
        for (const auto& mu0 : enumerate_partitions(w, 2)) {
            for (const auto& mu0p : enumerate_partitions(w + 2, 2)) tasks.push_back({mu0, mu0p});
        }
    }

    // Each mu0 (resp. mu0') shares its sequence across tasks, so the sums are
    // computed once up front.
    std::map<Partition, std::vector<bigint>> a_seq, b_seq;
    std::vector<std::pair<Partition, bool>> seq_jobs; // (partition, is A-side)
    for (const auto& t : tasks) {
        if (a_seq.try_emplace(t.mu0).second) seq_jobs.emplace_back(t.mu0, true);
    }
    // B-side windows depend on the weight of the partner mu0, which is fixed at |mu0'| - 2.
    for (const auto& t : tasks) {
        if (b_seq.try_emplace(t.mu0p).second) seq_jobs.emplace_back(t.mu0p, false);
    }
    parallel_for(seq_jobs.size(), jobs, [&](std::size_t i) {
        const auto& [p, is_a] = seq_jobs[i];
        const int lo = is_a ? p.weight() : p.weight() - 2;
        std::vector<bigint> seq;
        for (int n = lo; n <= lo + window; ++n) seq.push_back(is_a ? sum_A(p, n) : sum_B(p, n + 2));
        (is_a ? a_seq : b_seq).at(p) = std::move(seq);
    });

    std::vector<TheoremPair> out;
    for (const auto& t : tasks) {
        auto r = detail::constant_ratio(a_seq.at(t.mu0), b_seq.at(t.mu0p));
        if (!r) continue;
        const auto form = theorem_form_of(t.mu0);
        const bool predicted = form && companion_mu_prime(*form) == t.mu0p;
        out.push_back({t.mu0, t.mu0p, *r, t.mu0.weight(), t.mu0.weight() + window, predicted});
    }
    return out;
}

inline nlohmann::ordered_json to_json(const TheoremPair& p) {
    return {{"mu0", to_string(p.mu0)},
            {"mu0_prime", to_string(p.mu0_prime)},
            {"ratio", to_string(p.ratio)},
            {"evidence_n", {p.n_lo, p.n_hi}},
            {"theorem_predicted", p.theorem_predicted}};
}

// ---------------------------------------------------------------------------
// Rational functions of n
// ---------------------------------------------------------------------------

/// Dense polynomial over Q in one variable, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<rational> cs) : coeffs_(std::move(cs)) {
        for (auto& c : coeffs_) c.canonicalize();
        trim();
    }

    const std::vector<rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const rational& lead() const { return coeffs_.back(); }

    rational operator()(const rational& x) const {
        rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    QPoly scaled(const rational& s) const {
        std::vector<rational> cs = coeffs_;
        for (auto& c : cs) c *= s;
        return QPoly(std::move(cs));
    }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) throw precondition_error("polynomial division by zero");
        std::vector<rational> rem = a.coeffs_;
        if (a.degree() < b.degree()) return {QPoly{}, a};
        std::vector<rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        for (long k = a.degree() - b.degree(); k >= 0; --k) {
            const rational c = rem[static_cast<std::size_t>(k + b.degree())] / b.lead();
            quo[static_cast<std::size_t>(k)] = c;
            for (long i = 0; i <= b.degree(); ++i) rem[static_cast<std::size_t>(k + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
        }
        return {QPoly(std::move(quo)), QPoly(std::move(rem))};
    }

    bool operator==(const QPoly&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) is 0.
inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.scaled(1 / a.lead());
}

/// numerator / denominator in lowest terms with a monic denominator.
class RationalFn {
public:
    RationalFn(const QPoly& num, const QPoly& den) {
        if (den.is_zero()) throw precondition_error("rational function with zero denominator");
        const QPoly g = gcd(num, den);
        num_ = divmod(num, g).first;
        den_ = divmod(den, g).first;
        const rational lc = den_.lead();
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }

    const QPoly& numerator() const noexcept { return num_; }
    const QPoly& denominator() const noexcept { return den_; }

    /// Absent where the denominator vanishes.
    std::optional<rational> operator()(const rational& n) const {
        const rational d = den_(n);
        if (d == 0) return std::nullopt;
        return num_(n) / d;
    }

    bool operator==(const RationalFn&) const = default;

private:
    QPoly num_, den_;
};

enum class Family { A, B };

inline const char* to_string(Family f) { return f == Family::A ? "A" : "B"; }

struct FitOptions {
    int degree_cap = -1;  // -1 means 2 |mu0| + 4
    int min_holdout = 10; // held-out samples are max(d + 4, min_holdout)
    int max_shifts = 10;
};

struct ClosedFormFit {
    Partition mu0;
    Family family = Family::A;
    RationalFn R{QPoly(std::vector<rational>{0}), QPoly(std::vector<rational>{1})};
    int degree = 0;        // d: numerator and denominator degree bound
    int sample_lo = 0;     // first interpolation sample
    int sample_hi = 0;     // last interpolation sample
    int holdout_hi = 0;    // held-out samples are (sample_hi, holdout_hi]
};

namespace detail {

// Solves the square-or-tall system M x = rhs exactly. Free variables are set
// to 0; absent if inconsistent.
inline std::optional<std::vector<rational>> solve_exact(std::vector<std::vector<rational>> m, std::vector<rational> rhs) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (rhs[i] != 0) return std::nullopt;
    }
    std::vector<rational> x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / m[i][pivot_col[i]];
    return x;
}

inline rational power(long base, long e) {
    bigint r;
    mpz_pow_ui(r.get_mpz_t(), bigint(base).get_mpz_t(), static_cast<unsigned long>(e));
    return rational(r);
}

} // namespace detail

/// value(n) / C(2n, n) for the chosen family.
inline rational normalized_value(const Partition& mu0, Family family, int n) {
    const bigint v = family == Family::A ? sum_A(mu0, n) : sum_B(mu0, n);
    rational r(v, binomial(2UL * static_cast<unsigned long>(n), static_cast<unsigned long>(n)));
    r.canonicalize();
    return r;
}

/// Finds R with value(n) = C(2n, n) R(n). Tries d = 0, 1, ... up to the cap:
/// interpolates numerator and monic denominator of degree <= d through
/// 2d + 2 samples from n_lo, then checks held-out samples after them.
inline ClosedFormFit fit_closed_form(const Partition& mu0, Family family, int n_lo, const FitOptions& opts = {}) {
    if (mu0.has_part_one()) throw precondition_error("mu0 must not contain a part equal to 1");
    if (n_lo < mu0.weight()) throw precondition_error("n_lo is below |mu0|");
    const int cap = opts.degree_cap >= 0 ? opts.degree_cap : 2 * mu0.weight() + 4;

    std::map<int, rational> cache;
    auto sample = [&](int n) -> const rational& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, normalized_value(mu0, family, n)).first;
        return it->second;
    };

    for (int d = 0; d <= cap; ++d) {
        for (int shift = 0; shift <= opts.max_shifts; ++shift) {
            const int start = n_lo + shift;
            const int count = 2 * d + 2;
            const std::size_t unknowns = static_cast<std::size_t>(2 * d + 1);
            std::vector<std::vector<rational>> m;
            std::vector<rational> rhs;
            for (int i = 0; i < count; ++i) {
                const int n = start + i;
                const rational& R = sample(n);
                std::vector<rational> row(unknowns);
                for (int k = 0; k <= d; ++k) row[static_cast<std::size_t>(k)] = detail::power(n, k);
                for (int k = 0; k < d; ++k) row[static_cast<std::size_t>(d + 1 + k)] = -R * detail::power(n, k);
                m.push_back(std::move(row));
                rhs.push_back(R * detail::power(n, d));
            }
            auto x = detail::solve_exact(std::move(m), std::move(rhs));
            if (!x) break; // no fit of this degree

            std::vector<rational> num(x->begin(), x->begin() + d + 1);
            std::vector<rational> den(x->begin() + d + 1, x->end());
            den.push_back(1);
            const QPoly qn(num), qd(den);

            bool degenerate = false;
            for (int i = 0; i < count && !degenerate; ++i) degenerate = qd(start + i) == 0;
            if (degenerate) continue;

            const RationalFn R(qn, qd);
            const int holdout = std::max(d + 4, opts.min_holdout);
            bool valid = true;
            for (int n = start + count; n < start + count + holdout && valid; ++n) {
                auto v = R(n);
                valid = v && *v == sample(n);
            }
            if (!valid) break;
            return {mu0, family, R, d, start, start + count - 1, start + count + holdout - 1};
        }
    }
    throw fit_error("no rational closed form for " + std::string(to_string(family)) + "(" + to_string(mu0) +
                    ") with numerator/denominator degree <= " + std::to_string(cap));
}

inline nlohmann::ordered_json to_json(const QPoly& p) {
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) cs.push_back(to_string(c));
    return cs;
}

inline nlohmann::ordered_json to_json(const ClosedFormFit& f) {
    return {{"mu0", to_string(f.mu0)},
            {"family", to_string(f.family)},
            {"numerator", to_json(f.R.numerator())},
            {"denominator", to_json(f.R.denominator())},
            {"degree_bound", f.degree},
            {"samples", {f.sample_lo, f.sample_hi}},
            {"validated_through", f.holdout_hi}};
}

} // namespace charsum
