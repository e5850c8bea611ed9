#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "charsum/bigint.hpp"
#include "charsum/characters.hpp"
#include "charsum/error.hpp"
#include "charsum/parallel.hpp"
#include "charsum/partition.hpp"
#include "charsum/polyring.hpp"

namespace charsum {

/// A sum of squared characters; always >= 0.
using SumValue = bigint;

namespace detail {

inline void check_sum_args(const Partition& mu0, int n) {
    if (mu0.has_part_one()) throw precondition_error("mu0 must not contain a part equal to 1");
    if (n < mu0.weight()) {
        throw precondition_error("n = " + std::to_string(n) + " is below |mu0| = " + std::to_string(mu0.weight()));
    }
}

inline const SumValue& require_nonnegative(const SumValue& v, const char* what) {
    if (v < 0) throw consistency_error(std::string(what) + " evaluated to a negative value " + v.get_str());
    return v;
}

} // namespace detail

/// A(mu0)(n) = -1/2 Coeff_{x^{n+1}} [ (1-x)^2 (1+x)^{2(n-|mu0|)} prod (1+x^a)^2 ].
inline SumValue sum_A(const Partition& mu0, int n) {
    detail::check_sum_args(mu0, n);
    IntPoly q = poly_pow(IntPoly{1, -1}, 2);
    for (int a : mu0.parts()) q *= poly_pow(IntPoly::constant(1) + IntPoly::monomial(static_cast<std::size_t>(a)), 2);
    const bigint raw = -coeff_binomial_times(2L * (n - mu0.weight()), q, n + 1);
    if (!mpz_even_p(raw.get_mpz_t())) {
        throw consistency_error("two-rowed constant term " + raw.get_str() + " is odd for mu0 = " + to_string(mu0) +
                                ", n = " + std::to_string(n));
    }
    SumValue a = raw / 2;
    return detail::require_nonnegative(a, "A(mu0)(n)");
}

/// B(mu0)(n) = Coeff_{x^{n-1}} [ (1+x)^{2n-2-2|mu0|} prod (x^a - (-1)^a)(1 - (-1)^a x^a) ].
/// At n = |mu0| the exponent is -2 and (1+x)^{-2} is taken as a formal series.
inline SumValue sum_B(const Partition& mu0, int n) {
    detail::check_sum_args(mu0, n);
    IntPoly q = IntPoly::constant(1);
    for (int a : mu0.parts()) {
        const long sign = (a % 2) ? -1 : 1; // (-1)^a
        const auto xa = IntPoly::monomial(static_cast<std::size_t>(a));
        q *= (xa - IntPoly::constant(sign)) * (IntPoly::constant(1) - bigint(sign) * xa);
    }
    SumValue b = coeff_binomial_times(2L * n - 2 - 2L * mu0.weight(), q, n - 1);
    return detail::require_nonnegative(b, "B(mu0)(n)");
}

/// (n - j, j) without the zero part.
inline Partition two_row_shape(int n, int j) {
    std::vector<int> raw;
    if (n - j > 0) raw.push_back(n - j);
    if (j > 0) raw.push_back(j);
    return Partition(raw);
}

/// (j, 1^{n-j}) for 1 <= j <= n.
inline Partition hook_shape(int n, int j) {
    std::vector<int> raw{j};
    raw.insert(raw.end(), static_cast<std::size_t>(n - j), 1);
    return Partition(raw);
}

/// Sum over j <= n/2 of chi^{(n-j,j)}(mu0 1^{n-|mu0|})^2 by Murnaghan-Nakayama.
inline SumValue sum_A_bruteforce(const Partition& mu0, int n) {
    detail::check_sum_args(mu0, n);
    const Partition mu = mu0.padded_to(n);
    SumValue s = 0;
    for (int j = 0; j <= n / 2; ++j) {
        const CharValue c = char_mn(two_row_shape(n, j), mu);
        s += c * c;
    }
    return s;
}

/// Sum over 1 <= j <= n of chi^{(j,1^{n-j})}(mu0 1^{n-|mu0|})^2 by Murnaghan-Nakayama.
inline SumValue sum_B_bruteforce(const Partition& mu0, int n) {
    detail::check_sum_args(mu0, n);
    const Partition mu = mu0.padded_to(n);
    SumValue s = 0;
    for (int j = 1; j <= n; ++j) {
        const CharValue c = char_mn(hook_shape(n, j), mu);
        s += c * c;
    }
    return s;
}

struct VerificationRow {
    int n = 0;
    SumValue A;
    SumValue B; // B(mu0')(n + 2)
    bool holds = false;
};

struct VerificationReport {
    Partition mu0;
    Partition mu0_prime;
    int n_lo = 0;
    int n_hi = 0;
    std::vector<VerificationRow> rows;
    bool all_hold = false;
};

/// Checks 2 A(mu0)(n) == B(mu0')(n+2) for n in [n_lo, n_hi], mu0' the
/// theorem companion of mu0.
inline VerificationReport verify_theorem(const Partition& mu0, int n_lo, int n_hi, unsigned jobs = 1) {
    auto form = diagnose_theorem_form(mu0);
    if (auto* reason = std::get_if<std::string>(&form)) {
        throw precondition_error("not theorem form: " + *reason);
    }
    if (n_lo < mu0.weight()) {
        throw precondition_error("n range starts at " + std::to_string(n_lo) + ", below |mu0| = " +
                                 std::to_string(mu0.weight()));
    }
    if (n_hi < n_lo) throw precondition_error("empty n range");

    VerificationReport report;
    report.mu0 = mu0;
    report.mu0_prime = companion_mu_prime(std::get<TheoremForm>(form));
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.rows.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
    parallel_for(report.rows.size(), jobs, [&](std::size_t i) {
        auto& row = report.rows[i];
        row.n = n_lo + static_cast<int>(i);
        row.A = sum_A(mu0, row.n);
        row.B = sum_B(report.mu0_prime, row.n + 2);
        row.holds = 2 * row.A == row.B;
    });
    report.all_hold = std::all_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.holds; });
    return report;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n}, {"A", row.A.get_str()}, {"B", row.B.get_str()}, {"holds", row.holds}});
    }
    return {{"mu0", to_string(r.mu0)}, {"mu0_prime", to_string(r.mu0_prime)}, {"rows", rows}, {"all_hold", r.all_hold}};
}

} // namespace charsum
