#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "charsum/error.hpp"

namespace charsum {

/// Integer partition: parts stored non-increasing, all >= 1. The empty
/// partition (weight 0) is a valid value.
class Partition {
public:
    Partition() = default;

    /// Sorts `raw` into non-increasing order. Throws precondition_error on
    /// any entry < 1.
    explicit Partition(std::span<const int> raw) : parts_(raw.begin(), raw.end()) {
        for (int p : parts_) {
            if (p < 1) {
                throw precondition_error("partition parts must be positive, got " + std::to_string(p));
            }
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> raw) : Partition(std::span<const int>(raw.begin(), raw.size())) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Smallest part, or 0 for the empty partition.
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    bool has_part_one() const noexcept { return !parts_.empty() && parts_.back() == 1; }

    /// This partition padded with 1s up to weight n (the class mu0 1^{n-|mu0|}).
    Partition padded_to(int n) const {
        const int w = weight();
        if (n < w) {
            throw precondition_error("cannot pad partition of weight " + std::to_string(w) + " to " + std::to_string(n));
        }
        Partition r = *this;
        r.parts_.insert(r.parts_.end(), static_cast<std::size_t>(n - w), 1);
        return r;
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline Partition make_partition(std::span<const int> raw) { return Partition(raw); }

/// Comma-separated parts; the empty partition is "".
inline std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

/// Parses "5,4,3,2" (whitespace around parts tolerated). "" is the empty partition.
inline Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    std::vector<int> raw;
    if (text.empty()) return Partition{};
    while (true) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw parse_error("bad partition part '" + std::string(tok) + "'");
        }
        if (v < 1) throw parse_error("partition parts must be positive, got " + std::string(tok));
        raw.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(raw);
}

namespace detail {

inline void enumerate_rec(int remaining, int max_part, int min_part, std::vector<int>& cur,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, min_part, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of n with every part >= min_part, in lexicographically
/// descending order of part sequences: (4), (2,2) for n=4, min_part=2.
inline std::vector<Partition> enumerate_partitions(int n, int min_part = 1) {
    if (min_part < 1) throw precondition_error("min_part must be >= 1");
    if (n < 0) throw precondition_error("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::enumerate_rec(n, n, min_part, cur, out);
    return out;
}

/// mu0 = Sort(odd_parts U {2, 4, ..., 2^{t-1}}); t == 1 means no even parts.
struct TheoremForm {
    std::vector<int> odd_parts; // non-increasing, each odd and >= 3
    int t = 1;

    Partition reassemble() const {
        std::vector<int> raw = odd_parts;
        for (int j = 1; j <= t - 1; ++j) raw.push_back(1 << j);
        return Partition(raw);
    }

    bool operator==(const TheoremForm&) const = default;
};

/// Either the decomposition, or a sentence naming the first failing condition.
using TheoremFormResult = std::variant<TheoremForm, std::string>;

inline bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

inline TheoremFormResult diagnose_theorem_form(const Partition& mu0) {
    TheoremForm form;
    std::vector<int> evens;
    for (int p : mu0.parts()) {
        if (p == 1) return std::string("part 1 present");
        if (p % 2) {
            form.odd_parts.push_back(p);
        } else {
            if (!is_power_of_two(p)) return "even part " + std::to_string(p) + " is not a power of 2";
            if (!evens.empty() && evens.back() == p) return "duplicate even part " + std::to_string(p);
            evens.push_back(p);
        }
    }
    // evens is decreasing; it must be exactly 2^{k}, ..., 4, 2.
    std::reverse(evens.begin(), evens.end());
    for (std::size_t i = 0; i < evens.size(); ++i) {
        const int want = 1 << (i + 1);
        if (evens[i] != want) {
            return "power-of-2 run has a gap: missing part " + std::to_string(want);
        }
    }
    form.t = static_cast<int>(evens.size()) + 1;
    return form;
}

inline std::optional<TheoremForm> theorem_form_of(const Partition& mu0) {
    auto r = diagnose_theorem_form(mu0);
    if (auto* f = std::get_if<TheoremForm>(&r)) return *f;
    return std::nullopt;
}

/// Sort(odd_parts U {2^t}); weight is the source weight + 2.
inline Partition companion_mu_prime(const TheoremForm& form) {
    if (form.t < 1 || form.t > 30) throw precondition_error("theorem form needs 1 <= t <= 30");
    std::vector<int> raw = form.odd_parts;
    raw.push_back(1 << form.t);
    return Partition(raw);
}

} // namespace charsum
