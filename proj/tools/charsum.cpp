// charsum: command-line front end.
//
// Exit codes
//   0  success
//   1  verify ran but the identity failed for some n
//   2  malformed command line, partition, or range
//   3  mathematical precondition violated
//   4  two evaluation routes disagreed (internal bug)
//   5  search failed
//   6  fit failed
//   7  OEIS lookup failed (offline, network, or bad response)

#include <charconv>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charsum.hpp"
#ifdef CHARSUM_WITH_LIVE_OEIS
#include "charsum/oeis_http.hpp"
#endif

using namespace charsum;
using json = nlohmann::ordered_json;

namespace {

enum exit_code : int {
    ok = 0,
    identity_failed = 1,
    usage = 2,
    precondition = 3,
    mismatch = 4,
    search_failed = 5,
    fit_failed = 6,
    network = 7,
};

struct CliConfig {
    std::string format; // plain | json | csv; empty means the subcommand's default
    unsigned jobs = 1;
};

struct Range {
    int lo = 0;
    int hi = 0;
    bool single = true;
};

int parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) throw parse_error("bad integer '" + std::string(s) + "'");
    return v;
}

// "7" or "3..20", inclusive.
Range parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(s);
        return {v, v, true};
    }
    Range r{parse_int(std::string_view(s).substr(0, dots)), parse_int(std::string_view(s).substr(dots + 2)), false};
    if (r.hi < r.lo) throw parse_error("empty range '" + s + "'");
    return r;
}

std::string csv_quote(const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw parse_error("output format '" + f + "' is not available for this command");
}

// ---------------------------------------------------------------------------

struct CharArgs {
    std::string lambda, mu, method = "mn";
    bool check_all = false;
    std::size_t row_cap = default_row_cap;
};

// mu = mu0 1^k with mu0 the parts >= 2.
Partition strip_ones(const Partition& mu) {
    std::vector<int> raw;
    for (int p : mu.parts())
        if (p > 1) raw.push_back(p);
    return Partition(raw);
}

CharValue char_by(const std::string& method, const Partition& lambda, const Partition& mu, std::size_t row_cap) {
    if (method == "ct") return char_ct(lambda, mu, row_cap);
    if (method == "mn") return char_mn(lambda, mu);
    if (lambda.weight() != mu.weight()) throw precondition_error("weight mismatch");
    if (lambda.length() > 2) throw precondition_error("tworow needs a shape with at most two rows");
    const int n = lambda.weight();
    const int j = lambda.length() == 2 ? lambda[1] : 0;
    return char_two_row(n, j, strip_ones(mu));
}

int run_char(const CharArgs& a, const CliConfig& cfg) {
    const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;
    check_format(fmt, {"plain", "json", "csv"});
    const Partition lambda = parse_partition(a.lambda), mu = parse_partition(a.mu);
    const CharValue value = char_by(a.method, lambda, mu, a.row_cap);

    json checks = json::object();
    bool agree = true;
    if (a.check_all) {
        for (const char* m : {"ct", "mn", "tworow"}) {
            if (std::string(m) == "ct" && lambda.length() > a.row_cap) continue;
            if (std::string(m) == "tworow" && lambda.length() > 2) continue;
            const CharValue v = char_by(m, lambda, mu, a.row_cap);
            checks[m] = v.get_str();
            agree = agree && v == value;
        }
    }
    if (fmt == "json") {
        json out{{"lambda", to_string(lambda)}, {"mu", to_string(mu)}, {"method", a.method}, {"value", value.get_str()}};
        if (a.check_all) out["check_all"] = checks;
        std::cout << out.dump() << '\n';
    } else if (fmt == "csv") {
        std::cout << "lambda,mu,method,value\n"
                  << csv_quote(to_string(lambda)) << ',' << csv_quote(to_string(mu)) << ',' << a.method << ',' << value
                  << '\n';
    } else {
        std::cout << value << '\n';
    }
    if (!agree) {
        std::cerr << "error: methods disagree:";
        for (auto it = checks.begin(); it != checks.end(); ++it) std::cerr << ' ' << it.key() << '=' << it.value().get<std::string>();
        std::cerr << '\n';
        return mismatch;
    }
    return ok;
}

// ---------------------------------------------------------------------------

struct SumArgs {
    std::string family, mu0, n, mode = "lemma";
};

int run_sum(const SumArgs& a, const CliConfig& cfg) {
    const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;
    check_format(fmt, {"plain", "json", "csv"});
    if (a.family != "A" && a.family != "B") throw parse_error("family must be A or B");
    const Partition mu0 = parse_partition(a.mu0);
    const Range r = parse_range(a.n);
    const bool is_a = a.family == "A";

    struct Row {
        int n;
        SumValue value;
    };
    std::vector<Row> rows(static_cast<std::size_t>(r.hi - r.lo + 1));
    std::vector<std::string> mismatches(rows.size());
    parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
        const int n = r.lo + static_cast<int>(i);
        SumValue lemma, brute;
        if (a.mode != "brute") lemma = is_a ? sum_A(mu0, n) : sum_B(mu0, n);
        if (a.mode != "lemma") brute = is_a ? sum_A_bruteforce(mu0, n) : sum_B_bruteforce(mu0, n);
        if (a.mode == "both" && lemma != brute) {
            mismatches[i] = "n=" + std::to_string(n) + ": lemma " + lemma.get_str() + " != brute force " + brute.get_str();
        }
        rows[i] = {n, a.mode == "brute" ? brute : lemma};
    });
    for (const auto& m : mismatches) {
        if (!m.empty()) throw consistency_error(a.family + "(" + to_string(mu0) + ") " + m);
    }

    if (fmt == "json") {
        json out{{"family", a.family}, {"mu0", to_string(mu0)}, {"mode", a.mode}, {"rows", json::array()}};
        for (const auto& row : rows) out["rows"].push_back({{"n", row.n}, {"value", row.value.get_str()}});
        std::cout << out.dump() << '\n';
    } else if (fmt == "csv") {
        std::cout << "n,value\n";
        for (const auto& row : rows) std::cout << row.n << ',' << row.value << '\n';
    } else if (r.single) {
        std::cout << rows[0].value << '\n';
    } else {
        for (const auto& row : rows) std::cout << row.n << ' ' << row.value << '\n';
    }
    return ok;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string mu0, n;
};

int run_verify(const VerifyArgs& a, const CliConfig& cfg) {
    const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;
    check_format(fmt, {"plain", "json", "csv"});
    const Partition mu0 = parse_partition(a.mu0);
    const Range r = a.n.empty() ? Range{mu0.weight(), mu0.weight() + 20, false} : parse_range(a.n);
    const VerificationReport rep = verify_theorem(mu0, r.lo, r.hi, cfg.jobs);

    if (fmt == "json") {
        std::cout << to_json(rep).dump() << '\n';
    } else if (fmt == "csv") {
        std::cout << "n,A,B,holds\n";
        for (const auto& row : rep.rows) std::cout << row.n << ',' << row.A << ',' << row.B << ',' << (row.holds ? "true" : "false") << '\n';
    } else {
        std::cout << "mu0 = " << to_string(rep.mu0) << "\nmu0' = " << to_string(rep.mu0_prime) << '\n';
        std::cout << "n A(mu0)(n) B(mu0')(n+2) holds\n";
        for (const auto& row : rep.rows) std::cout << row.n << ' ' << row.A << ' ' << row.B << ' ' << (row.holds ? "yes" : "NO") << '\n';
        std::cout << "all_hold = " << (rep.all_hold ? "true" : "false") << '\n';
    }
    return rep.all_hold ? ok : identity_failed;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
    int K = 8;
    int window = 12;
};

int run_search(const SearchArgs& a, const CliConfig& cfg) {
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    check_format(fmt, {"plain", "json", "csv"});
    std::vector<TheoremPair> pairs;
    try {
        pairs = search_pairs(a.K, a.window, cfg.jobs);
    } catch (const precondition_error& e) {
        std::cerr << "error: search: " << e.what() << '\n';
        return search_failed;
    }
    if (fmt == "json") {
        for (const auto& p : pairs) std::cout << to_json(p).dump() << '\n';
    } else if (fmt == "csv") {
        std::cout << "mu0,mu0_prime,ratio,n_lo,n_hi,theorem_predicted\n";
        for (const auto& p : pairs) {
            std::cout << csv_quote(to_string(p.mu0)) << ',' << csv_quote(to_string(p.mu0_prime)) << ',' << to_string(p.ratio)
                      << ',' << p.n_lo << ',' << p.n_hi << ',' << (p.theorem_predicted ? "true" : "false") << '\n';
        }
    } else {
        for (const auto& p : pairs) {
            std::cout << '(' << to_string(p.mu0) << ") -> (" << to_string(p.mu0_prime) << ")  ratio " << to_string(p.ratio)
                      << "  n in [" << p.n_lo << ", " << p.n_hi << "]" << (p.theorem_predicted ? "  predicted" : "  UNPREDICTED")
                      << '\n';
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------

struct FitArgs {
    std::string family = "A", mu0;
    std::optional<int> n_lo;
    std::optional<int> degree_cap;
};

std::string poly_text(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const rational mag = abs(c);
        if (mag.get_den() != 1) out += "(" + to_string(mag) + ")";
        else if (k == 0 || mag != 1) out += to_string(mag);
        if (k > 0) out += (k == 1) ? "n" : "n^" + std::to_string(k);
    }
    return out;
}

int run_fit(const FitArgs& a, const CliConfig& cfg) {
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    check_format(fmt, {"plain", "json"});
    if (a.family != "A" && a.family != "B") throw parse_error("family must be A or B");
    const Partition mu0 = parse_partition(a.mu0);
    FitOptions opts;
    if (a.degree_cap) opts.degree_cap = *a.degree_cap;
    ClosedFormFit fit;
    try {
        fit = fit_closed_form(mu0, a.family == "A" ? Family::A : Family::B, a.n_lo.value_or(mu0.weight()), opts);
    } catch (const std::exception& e) {
        std::cerr << "error: fit: " << e.what() << '\n';
        return fit_failed;
    }
    if (fmt == "json") {
        std::cout << to_json(fit).dump() << '\n';
    } else {
        std::cout << a.family << "(" << to_string(mu0) << ")(n) = C(2n,n) * [" << poly_text(fit.R.numerator()) << "] / ["
                  << poly_text(fit.R.denominator()) << "]\n"
                  << "interpolated on n in [" << fit.sample_lo << ", " << fit.sample_hi << "], validated through n = "
                  << fit.holdout_hi << '\n';
    }
    return ok;
}

// ---------------------------------------------------------------------------

struct OeisArgs {
    std::vector<std::string> values;
    std::string family, mu0, n;
    bool live = false;
    bool no_cache = false;
    std::string fixtures, cache_dir;
    std::size_t max_results = 10;
};

int run_oeis(const OeisArgs& a, const CliConfig& cfg) {
    const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;
    check_format(fmt, {"plain", "json"});

    std::vector<bigint> values;
    if (!a.family.empty()) {
        if (!a.values.empty()) throw parse_error("give either explicit values or --family/--mu0/--n, not both");
        if (a.family != "A" && a.family != "B") throw parse_error("family must be A or B");
        const Partition mu0 = parse_partition(a.mu0);
        const Range r = a.n.empty() ? Range{mu0.weight(), mu0.weight() + 11, false} : parse_range(a.n);
        for (int n = r.lo; n <= r.hi; ++n) values.push_back(a.family == "A" ? sum_A(mu0, n) : sum_B(mu0, n));
    } else {
        for (const auto& tok : a.values) {
            std::stringstream ss(tok);
            for (std::string part; std::getline(ss, part, ',');) {
                if (part.empty()) continue;
                bigint v;
                if (v.set_str(part, 10) != 0) throw parse_error("bad integer '" + part + "'");
                values.push_back(v);
            }
        }
    }

    std::shared_ptr<oeis::Transport> transport;
    if (a.live) {
#ifdef CHARSUM_WITH_LIVE_OEIS
        transport = std::make_shared<oeis::HttpTransport>();
#else
        std::cerr << "error: this build has no live OEIS support\n";
        return network;
#endif
    } else if (!a.fixtures.empty()) {
        transport = std::make_shared<oeis::FixtureTransport>(a.fixtures);
    } else {
        transport = std::make_shared<oeis::OfflineTransport>();
    }
    std::optional<std::filesystem::path> cache;
    if (!a.no_cache) cache = a.cache_dir.empty() ? oeis::default_cache_dir() : std::filesystem::path(a.cache_dir);

    oeis::Client client(transport, cache);
    oeis::LookupResult res;
    try {
        res = client.lookup(values, a.max_results);
    } catch (const network_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return network;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return network;
    }
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
    if (fmt == "json") {
        std::cout << to_json(res).dump() << '\n';
    } else {
        if (res.matches.empty()) std::cout << "no matches\n";
        for (const auto& m : res.matches) {
            std::cout << m.sequence_id << "  offset " << m.matched_offset << "  length " << m.match_length << "  " << m.name << '\n';
        }
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric-group character sums over two-rowed and hook shapes"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--format", cfg.format, "Output format: plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps and search")->check(CLI::PositiveNumber);

    CharArgs char_args;
    auto* c = app.add_subcommand("char", "Evaluate a character chi^lambda(mu)");
    c->add_option("--lambda", char_args.lambda, "Shape, e.g. \"2,1\"")->required();
    c->add_option("--mu", char_args.mu, "Cycle type, e.g. \"3\"")->required();
    c->add_option("--method", char_args.method, "ct, mn or tworow")->check(CLI::IsMember({"ct", "mn", "tworow"}));
    c->add_flag("--check-all", char_args.check_all, "Evaluate every applicable method and compare");
    c->add_option("--row-cap", char_args.row_cap, "Largest row count for the constant-term method")->check(CLI::PositiveNumber);

    SumArgs sum_args;
    auto* s = app.add_subcommand("sum", "Sum of squared characters over two-rowed (A) or hook (B) shapes");
    s->add_option("family", sum_args.family, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
    s->add_option("--mu0", sum_args.mu0, "Partition without parts equal to 1; \"\" for the empty partition")->required();
    s->add_option("--n", sum_args.n, "n or lo..hi")->required();
    s->add_option("--mode", sum_args.mode, "lemma, brute or both")->check(CLI::IsMember({"lemma", "brute", "both"}));

    VerifyArgs verify_args;
    auto* v = app.add_subcommand("verify", "Check 2 A(mu0)(n) = B(mu0')(n+2) for theorem-form mu0");
    v->add_option("--mu0", verify_args.mu0, "Theorem-form partition")->required();
    v->add_option("--n", verify_args.n, "n or lo..hi (default |mu0|..|mu0|+20)");

    SearchArgs search_args;
    auto* se = app.add_subcommand("search", "Search for pairs with a constant A/B ratio");
    se->add_option("--K", search_args.K, "Largest |mu0|")->capture_default_str();
    se->add_option("--window", search_args.window, "Evidence window: n in [|mu0|, |mu0| + window]")->capture_default_str();

    FitArgs fit_args;
    auto* f = app.add_subcommand("fit", "Fit value(n) = C(2n,n) R(n) with R rational");
    f->add_option("--family", fit_args.family, "A or B")->check(CLI::IsMember({"A", "B"}));
    f->add_option("--mu0", fit_args.mu0, "Partition without parts equal to 1")->required();
    f->add_option("--n-lo", fit_args.n_lo, "First sample (default |mu0|)");
    f->add_option("--degree-cap", fit_args.degree_cap, "Largest degree tried (default 2|mu0|+4)");

    OeisArgs oeis_args;
    auto* o = app.add_subcommand("oeis", "Look up a sequence in the OEIS");
    o->add_option("values", oeis_args.values, "Terms, comma or space separated");
    o->add_option("--family", oeis_args.family, "Look up A or B instead of explicit values");
    o->add_option("--mu0", oeis_args.mu0, "Partition for --family");
    o->add_option("--n", oeis_args.n, "n range for --family (default |mu0|..|mu0|+11)");
    o->add_flag("--live", oeis_args.live, "Query oeis.org when the cache misses");
    o->add_option("--fixtures", oeis_args.fixtures, "Serve responses from recorded fixtures in this directory");
    o->add_option("--cache-dir", oeis_args.cache_dir, "Cache directory (default $CHARSUM_OEIS_CACHE)");
    o->add_flag("--no-cache", oeis_args.no_cache, "Neither read nor write the cache");
    o->add_option("--max-results", oeis_args.max_results, "Most matches to report")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*c) return run_char(char_args, cfg);
        if (*s) return run_sum(sum_args, cfg);
        if (*v) return run_verify(verify_args, cfg);
        if (*se) return run_search(search_args, cfg);
        if (*f) return run_fit(fit_args, cfg);
        if (*o) return run_oeis(oeis_args, cfg);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return precondition;
    } catch (const consistency_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return mismatch;
    }
    return usage;
}
