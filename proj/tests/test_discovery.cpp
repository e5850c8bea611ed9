#include <gtest/gtest.h>

#include <set>

#include "charsum/discovery.hpp"
#include "oracles.hpp"

using namespace charsum;

TEST(RatioTest, RemarkablePair) {
    auto r = ratio_test({3}, {3, 2}, 3, 12);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, rational(1, 2));
}

TEST(RatioTest, TheoremPairWithRun) {
    auto r = ratio_test({5, 4, 3, 2}, {8, 5, 3}, 14, 22);
    ASSERT_TRUE(r);
    EXPECT_EQ(to_string(*r), "1/2");
}

TEST(RatioTest, VaryingRatioIsAbsent) {
    EXPECT_FALSE(ratio_test({3}, {5}, 3, 12));
    // The sequences really are non-proportional.
    EXPECT_NE(sum_A({3}, 3) * sum_B({5}, 6), sum_A({3}, 4) * sum_B({5}, 5));
}

TEST(RatioTest, Preconditions) {
    EXPECT_THROW(ratio_test({3}, {3, 3}, 3, 12), precondition_error);
    EXPECT_THROW(ratio_test({3}, {3, 2}, 3, 5), precondition_error);
    EXPECT_THROW(ratio_test({3}, {3, 2}, 2, 12), precondition_error);
    EXPECT_THROW(ratio_test({3, 1}, {3, 2, 1}, 5, 12), precondition_error);
}

TEST(RatioTest, ZeroHandling) {
    using detail::constant_ratio;
    const std::vector<bigint> zeros(5, 0), ones(5, 1);
    EXPECT_FALSE(constant_ratio(zeros, zeros));
    EXPECT_FALSE(constant_ratio(ones, {1, 1, 0, 1, 1}));
    EXPECT_EQ(*constant_ratio({0, 2, 4}, {0, 4, 8}), rational(1, 2));
    EXPECT_EQ(*constant_ratio(zeros, ones), rational(0));
}

TEST(Search, SmallKIncludesOddOnlyPairs) {
    const auto pairs = search_pairs(5, 10);
    auto has = [&](const Partition& a, const Partition& b) {
        for (const auto& p : pairs)
            if (p.mu0 == a && p.mu0_prime == b) return p.ratio == rational(1, 2) && p.theorem_predicted;
        return false;
    };
    EXPECT_TRUE(has({3}, {3, 2}));
    EXPECT_TRUE(has({5}, {5, 2}));
}

TEST(Search, KTwoWindowSix) {
    // Fixed by an exhaustive run: only the two theorem companions survive.
    const auto pairs = search_pairs(2, 6);
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(pairs[0].mu0, Partition{});
    EXPECT_EQ(pairs[0].mu0_prime, (Partition{2}));
    EXPECT_EQ(pairs[1].mu0, (Partition{2}));
    EXPECT_EQ(pairs[1].mu0_prime, (Partition{4}));
    for (const auto& p : pairs) {
        EXPECT_TRUE(p.theorem_predicted);
        EXPECT_EQ(p.ratio, rational(1, 2));
    }
    EXPECT_EQ(pairs[1].n_lo, 2);
    EXPECT_EQ(pairs[1].n_hi, 8);
}

TEST(Search, CompleteAndConsistentUpToTen) {
    const auto pairs = search_pairs(10, 12);
    std::set<std::pair<Partition, Partition>> found;
    for (const auto& p : pairs) {
        found.emplace(p.mu0, p.mu0_prime);
        EXPECT_EQ(p.mu0_prime.weight(), p.mu0.weight() + 2);
        if (p.theorem_predicted) {
            EXPECT_EQ(p.ratio, rational(1, 2));
            EXPECT_TRUE(verify_theorem(p.mu0, p.n_lo, p.n_hi).all_hold);
        }
    }
    for (int w = 0; w <= 10; ++w) {
        for (const auto& mu0 : enumerate_partitions(w, 2)) {
            if (auto f = theorem_form_of(mu0)) {
                EXPECT_TRUE(found.count({mu0, companion_mu_prime(*f)})) << to_string(mu0);
            }
        }
    }
}

TEST(Search, OrderIndependentOfJobs) {
    EXPECT_EQ(search_pairs(7, 8, 1), search_pairs(7, 8, 3));
}

TEST(Search, Json) {
    const auto pairs = search_pairs(3, 10);
    ASSERT_GE(pairs.size(), 3u);
    EXPECT_EQ(to_json(pairs[2]).dump(),
              R"({"mu0":"3","mu0_prime":"3,2","ratio":"1/2","evidence_n":[3,13],"theorem_predicted":true})");
}

TEST(QPolyOps, GcdAndDivision) {
    // (n - 1)(n + 2) and (n - 1)(n + 5)
    const QPoly a(std::vector<rational>{-2, 1, 1}), b(std::vector<rational>{-5, 4, 1});
    EXPECT_EQ(gcd(a, b), QPoly(std::vector<rational>{-1, 1}));
    auto [q, r] = divmod(a, QPoly(std::vector<rational>{-1, 1}));
    EXPECT_EQ(q, QPoly(std::vector<rational>{2, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(a(rational(3)), rational(10));
}

TEST(RationalFnOps, LowestTermsMonicDenominator) {
    // (2n - 2) / (4n^2 - 4) = (1/2) / (n + 1)
    const RationalFn f(QPoly(std::vector<rational>{-2, 2}), QPoly(std::vector<rational>{-4, 0, 4}));
    EXPECT_EQ(f.numerator(), QPoly(std::vector<rational>{rational(1, 2)}));
    EXPECT_EQ(f.denominator(), QPoly(std::vector<rational>{1, 1}));
    EXPECT_EQ(*f(rational(1)), rational(1, 4));
    EXPECT_FALSE(f(rational(-1)));
    EXPECT_THROW(RationalFn(QPoly(std::vector<rational>{1}), QPoly{}), precondition_error);
}

TEST(Fit, EmptyMuCatalan) {
    const auto fit = fit_closed_form(Partition{}, Family::A, 0);
    // A(empty)(n) = C(2n,n) / (n + 1)
    EXPECT_EQ(fit.R, RationalFn(QPoly(std::vector<rational>{1}), QPoly(std::vector<rational>{1, 1})));
    EXPECT_GE(fit.holdout_hi - fit.sample_hi, 10);
    for (int n = 0; n <= 60; ++n) {
        EXPECT_EQ(*fit.R(n) * oracle::plain_binomial(2 * n, n), oracle::plain_binomial(2 * n, n) / (n + 1));
    }
}

TEST(Fit, ValidatesFarBeyondSamples) {
    for (const auto& [mu0, family] : std::vector<std::pair<Partition, Family>>{
             {{3}, Family::A}, {{3, 2}, Family::B}, {{2, 2}, Family::A}, {{5, 2}, Family::A}}) {
        const int lo = mu0.weight();
        const auto fit = fit_closed_form(mu0, family, lo);
        for (int n = lo; n <= lo + 30; ++n) {
            const rational want = normalized_value(mu0, family, n);
            auto got = fit.R(n);
            ASSERT_TRUE(got) << to_string(mu0) << " n=" << n;
            EXPECT_EQ(*got, want) << to_string(mu0) << " n=" << n;
        }
    }
}

TEST(Fit, StableUnderShiftedStart) {
    for (const auto& mu0 : std::vector<Partition>{{}, {2}, {3}, {2, 2}, {3, 2}, {4, 3}}) {
        for (Family fam : {Family::A, Family::B}) {
            const int lo = std::max(mu0.weight(), 1);
            EXPECT_EQ(fit_closed_form(mu0, fam, lo).R, fit_closed_form(mu0, fam, lo + 1).R)
                << to_string(mu0) << " " << to_string(fam);
        }
    }
}

TEST(Fit, CapExhaustion) {
    FitOptions opts;
    opts.degree_cap = 1;
    try {
        fit_closed_form({3, 2}, Family::A, 5, opts);
        FAIL();
    } catch (const fit_error& e) {
        EXPECT_NE(std::string(e.what()).find("<= 1"), std::string::npos);
    }
    EXPECT_THROW(fit_closed_form({3}, Family::A, 2), precondition_error);
}
