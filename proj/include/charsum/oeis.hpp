#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "charsum/bigint.hpp"
#include "charsum/error.hpp"

namespace charsum::oeis {

struct OeisMatch {
    std::string sequence_id; // "A000984"
    std::string name;
    long matched_offset = -1; // index of the first query term inside the entry's data, -1 if not found
    long match_length = 0;    // number of query terms matched contiguously there

    bool operator==(const OeisMatch&) const = default;
};

struct LookupResult {
    std::vector<OeisMatch> matches;
    bool low_information = false; // query has at most two distinct values
    bool from_cache = false;
    std::vector<std::string> warnings;
};

inline constexpr std::size_t min_query_terms = 6;
inline constexpr std::size_t max_query_terms = 12;

/// Fetches the raw JSON body for a comma-joined query.
class Transport {
public:
    virtual ~Transport() = default;
    virtual std::string fetch(const std::string& query) = 0;
};

/// Stable 64-bit FNV-1a of the query, as 16 hex digits. Names cache and fixture files.
inline std::string query_key(const std::string& query) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : query) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace detail {

inline std::optional<std::string> read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string snippet(const std::string& s) {
    return s.size() <= 80 ? s : s.substr(0, 80) + "...";
}

} // namespace detail

/// Serves recorded responses from <dir>/<query_key>.json.
class FixtureTransport : public Transport {
public:
    explicit FixtureTransport(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::string fetch(const std::string& query) override {
        const auto path = dir_ / (query_key(query) + ".json");
        if (auto body = detail::read_file(path)) return *body;
        throw network_error("offline: no recorded response for query '" + query + "' (expected " + path.string() + ")");
    }

private:
    std::filesystem::path dir_;
};

/// Always fails; the default when live access was not requested.
class OfflineTransport : public Transport {
public:
    std::string fetch(const std::string& query) override {
        throw network_error("offline: no cached response for query '" + query + "' and live lookup is disabled");
    }
};

/// Forwards to another transport and records every query it sees.
class RecordingTransport : public Transport {
public:
    explicit RecordingTransport(std::shared_ptr<Transport> inner) : inner_(std::move(inner)) {}

    std::string fetch(const std::string& query) override {
        queries_.push_back(query);
        return inner_->fetch(query);
    }

    const std::vector<std::string>& queries() const noexcept { return queries_; }

private:
    std::shared_ptr<Transport> inner_;
    std::vector<std::string> queries_;
};

/// Parses a search response. Accepts the bare-array form, the older
/// {"results": [...]} envelope, and `null` (no matches).
inline std::vector<OeisMatch> parse_response(const std::string& payload, const std::vector<std::string>& query,
                                             std::size_t max_results) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::parse_error&) {
        throw parse_error("malformed OEIS response: " + detail::snippet(payload));
    }
    nlohmann::json entries;
    if (doc.is_null()) {
        return {};
    } else if (doc.is_array()) {
        entries = doc;
    } else if (doc.is_object() && doc.contains("results")) {
        entries = doc["results"];
        if (entries.is_null()) return {};
    } else {
        throw parse_error("unexpected OEIS response shape: " + detail::snippet(payload));
    }
    if (!entries.is_array()) throw parse_error("OEIS results are not a list: " + detail::snippet(payload));

    std::vector<OeisMatch> out;
    for (const auto& e : entries) {
        if (out.size() >= max_results) break;
        if (!e.is_object() || !e.contains("number") || !e["number"].is_number_integer()) {
            throw parse_error("OEIS entry without a sequence number: " + detail::snippet(e.dump()));
        }
        OeisMatch m;
        char id[16];
        std::snprintf(id, sizeof id, "A%06lld", static_cast<long long>(e["number"].get<std::int64_t>()));
        m.sequence_id = id;
        m.name = e.value("name", "");

        std::vector<std::string> data;
        std::stringstream ds(e.value("data", ""));
        for (std::string tok; std::getline(ds, tok, ',');) data.push_back(tok);
        for (std::size_t i = 0; i + query.size() <= data.size(); ++i) {
            if (std::equal(query.begin(), query.end(), data.begin() + static_cast<long>(i))) {
                m.matched_offset = static_cast<long>(i);
                m.match_length = static_cast<long>(query.size());
                break;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// CHARSUM_OEIS_CACHE, else $XDG_CACHE_HOME/charsum/oeis, else ~/.cache/charsum/oeis.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("CHARSUM_OEIS_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "charsum" / "oeis";
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "charsum" / "oeis";
    }
    return std::filesystem::temp_directory_path() / "charsum-oeis";
}

/// Lookup service with an on-disk cache in front of a transport. Calls are
/// serialized, so at most one request is in flight.
class Client {
public:
    Client(std::shared_ptr<Transport> transport, std::optional<std::filesystem::path> cache_dir)
        : transport_(std::move(transport)), cache_dir_(std::move(cache_dir)) {}

    LookupResult lookup(const std::vector<bigint>& values, std::size_t max_results = 10) {
        if (values.size() < min_query_terms) {
            throw precondition_error("OEIS lookup needs at least " + std::to_string(min_query_terms) + " terms, got " +
                                     std::to_string(values.size()));
        }
        LookupResult result;
        std::vector<std::string> terms;
        for (const auto& v : values) terms.push_back(v.get_str());
        if (terms.size() > max_query_terms) {
            result.warnings.push_back("query truncated to the first " + std::to_string(max_query_terms) + " of " +
                                      std::to_string(terms.size()) + " terms");
            terms.resize(max_query_terms);
        }
        if (std::set<std::string>(terms.begin(), terms.end()).size() <= 2) {
            result.low_information = true;
            result.warnings.push_back("low-information query: matches are ambiguous");
        }
        std::string query;
        for (std::size_t i = 0; i < terms.size(); ++i) query += (i ? "," : "") + terms[i];

        std::lock_guard lock(mutex_);
        std::optional<std::string> payload;
        std::filesystem::path cache_file;
        if (cache_dir_) {
            cache_file = *cache_dir_ / (query_key(query) + ".json");
            payload = detail::read_file(cache_file);
            result.from_cache = payload.has_value();
        }
        if (!payload) payload = transport_->fetch(query);
        result.matches = parse_response(*payload, terms, max_results);
        if (cache_dir_ && !result.from_cache) {
            std::error_code ec;
            std::filesystem::create_directories(*cache_dir_, ec);
            std::ofstream out(cache_file, std::ios::binary);
            if (out) out << *payload;
            else result.warnings.push_back("could not write cache file " + cache_file.string());
        }
        return result;
    }

private:
    std::shared_ptr<Transport> transport_;
    std::optional<std::filesystem::path> cache_dir_;
    std::mutex mutex_;
};

inline nlohmann::ordered_json to_json(const OeisMatch& m) {
    return {{"id", m.sequence_id}, {"name", m.name}, {"offset", m.matched_offset}, {"length", m.match_length}};
}

inline nlohmann::ordered_json to_json(const LookupResult& r) {
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (const auto& m : r.matches) ms.push_back(to_json(m));
    return {{"matches", ms}, {"low_information", r.low_information}, {"warnings", r.warnings}};
}

} // namespace charsum::oeis
