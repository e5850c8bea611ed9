#pragma once

// Live transport. Needs cpp-httplib built with CPPHTTPLIB_OPENSSL_SUPPORT
// and linking against OpenSSL.

#include <chrono>
#include <mutex>
#include <string>
#include <thread>

#include <httplib.h>

#include "charsum/error.hpp"
#include "charsum/oeis.hpp"

namespace charsum::oeis {

/// GET https://oeis.org/search?q=<query>&fmt=json, at most one request per
/// two seconds across all instances.
class HttpTransport : public Transport {
public:
    explicit HttpTransport(std::string host = "https://oeis.org") : host_(std::move(host)) {}

    std::string fetch(const std::string& query) override {
        static std::mutex gate;
        static std::chrono::steady_clock::time_point last{};
        std::lock_guard lock(gate);
        const auto earliest = last + std::chrono::seconds(2);
        if (const auto now = std::chrono::steady_clock::now(); now < earliest) std::this_thread::sleep_until(earliest);

        httplib::Client cli(host_);
        cli.set_connection_timeout(10);
        cli.set_read_timeout(30);
        cli.set_follow_location(true);
        httplib::Params params{{"q", query}, {"fmt", "json"}};
        auto res = cli.Get("/search", params, httplib::Headers{});
        last = std::chrono::steady_clock::now();
        if (!res) throw network_error("OEIS request failed: " + httplib::to_string(res.error()));
        if (res->status != 200) throw network_error("OEIS returned HTTP " + std::to_string(res->status));
        return res->body;
    }

private:
    std::string host_;
};

} // namespace charsum::oeis
