#include <gtest/gtest.h>

#include <random>
#include <set>

#include "charsum/partition.hpp"
#include "oracles.hpp"

using namespace charsum;

TEST(Partition, SortsRawParts) {
    const std::vector<int> raw{5, 3, 2, 4};
    const Partition p = make_partition(raw);
    EXPECT_EQ(p.parts(), (std::vector<int>{5, 4, 3, 2}));
    EXPECT_EQ(p.weight(), 14);
}

TEST(Partition, EmptyAndAlreadySorted) {
    const Partition e = make_partition(std::vector<int>{});
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(e.weight(), 0);
    EXPECT_EQ(to_string(e), "");
    EXPECT_EQ((Partition{3, 3, 3}).parts(), (std::vector<int>{3, 3, 3}));
}

TEST(Partition, RejectsNonPositiveParts) {
    EXPECT_THROW(make_partition(std::vector<int>{3, 0}), precondition_error);
    EXPECT_THROW(make_partition(std::vector<int>{-2}), precondition_error);
}

TEST(Partition, TextFormat) {
    EXPECT_EQ(parse_partition("5,4,3,2"), (Partition{5, 4, 3, 2}));
    EXPECT_EQ(parse_partition(" 2, 3 "), (Partition{3, 2}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(to_string(Partition{2, 5, 3}), "5,3,2");
    EXPECT_THROW(parse_partition("3,,2"), parse_error);
    EXPECT_THROW(parse_partition("3,x"), parse_error);
    EXPECT_THROW(parse_partition("0"), parse_error);
    EXPECT_THROW(parse_partition("2,"), parse_error);
}

TEST(Partition, PaddedWithOnes) {
    EXPECT_EQ((Partition{3}).padded_to(5), (Partition{3, 1, 1}));
    EXPECT_THROW((Partition{3}).padded_to(2), precondition_error);
}

TEST(Enumerate, SmallCasesWithMinPartTwo) {
    EXPECT_EQ(enumerate_partitions(4, 2), (std::vector<Partition>{{4}, {2, 2}}));
    EXPECT_EQ(enumerate_partitions(5, 2), (std::vector<Partition>{{5}, {3, 2}}));
    EXPECT_EQ(enumerate_partitions(0, 2), (std::vector<Partition>{Partition{}}));
    EXPECT_TRUE(enumerate_partitions(1, 2).empty());
}

TEST(Enumerate, LexicographicDescendingOrder) {
    const auto ps = enumerate_partitions(7, 1);
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1].parts(), ps[i].parts());
}

TEST(Enumerate, CountsMatchPentagonalRecurrence) {
    const auto p = oracle::partition_counts(30);
    for (int n = 0; n <= 30; ++n) {
        const auto ps = enumerate_partitions(n, 1);
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(ps.size())), p[static_cast<std::size_t>(n)]) << "n=" << n;
        std::set<Partition> distinct(ps.begin(), ps.end());
        EXPECT_EQ(distinct.size(), ps.size());
        for (const auto& q : ps) EXPECT_EQ(q.weight(), n);
    }
    // p(n) - p(n-1) counts partitions without 1s.
    for (int n = 1; n <= 30; ++n) {
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_partitions(n, 2).size())),
                  p[static_cast<std::size_t>(n)] - p[static_cast<std::size_t>(n - 1)]);
    }
}

TEST(TheoremForm, RecognizesForms) {
    auto f = theorem_form_of({5, 4, 3, 2});
    ASSERT_TRUE(f);
    EXPECT_EQ(f->odd_parts, (std::vector<int>{5, 3}));
    EXPECT_EQ(f->t, 3);

    f = theorem_form_of({7, 5, 3});
    ASSERT_TRUE(f);
    EXPECT_EQ(f->odd_parts, (std::vector<int>{7, 5, 3}));
    EXPECT_EQ(f->t, 1);

    f = theorem_form_of({2});
    ASSERT_TRUE(f);
    EXPECT_TRUE(f->odd_parts.empty());
    EXPECT_EQ(f->t, 2);

    f = theorem_form_of(Partition{});
    ASSERT_TRUE(f);
    EXPECT_EQ(f->t, 1);
}

TEST(TheoremForm, RejectsWithNamedReason) {
    EXPECT_FALSE(theorem_form_of({3, 2, 2}));
    EXPECT_EQ(std::get<std::string>(diagnose_theorem_form({3, 2, 2})), "duplicate even part 2");
    EXPECT_EQ(std::get<std::string>(diagnose_theorem_form({2, 2})), "duplicate even part 2");
    EXPECT_EQ(std::get<std::string>(diagnose_theorem_form({6, 3})), "even part 6 is not a power of 2");
    EXPECT_EQ(std::get<std::string>(diagnose_theorem_form({4, 3})), "power-of-2 run has a gap: missing part 2");
    EXPECT_EQ(std::get<std::string>(diagnose_theorem_form({8, 2})), "power-of-2 run has a gap: missing part 4");
    EXPECT_EQ(std::get<std::string>(diagnose_theorem_form({3, 1})), "part 1 present");
    EXPECT_FALSE(theorem_form_of({4, 4, 2}));
}

TEST(TheoremForm, Companion) {
    EXPECT_EQ(companion_mu_prime(*theorem_form_of({3})), (Partition{3, 2}));
    EXPECT_EQ(companion_mu_prime(*theorem_form_of({5, 4, 3, 2})), (Partition{8, 5, 3}));
    EXPECT_EQ(companion_mu_prime(*theorem_form_of({3, 2})), (Partition{4, 3}));
    EXPECT_EQ(companion_mu_prime(*theorem_form_of(Partition{})), (Partition{2}));
}

// Every partition without 1s up to weight 24: theorem-form ones round-trip
// and shift weight by 2; non-theorem ones contain a bad even part.
TEST(TheoremForm, RoundTripAndWeightShiftExhaustive) {
    int forms = 0;
    for (int w = 0; w <= 24; ++w) {
        for (const auto& mu0 : enumerate_partitions(w, 2)) {
            auto f = theorem_form_of(mu0);
            if (!f) continue;
            ++forms;
            EXPECT_EQ(f->reassemble(), mu0);
            EXPECT_EQ(companion_mu_prime(*f).weight(), mu0.weight() + 2);
            for (int a : f->odd_parts) {
                EXPECT_EQ(a % 2, 1);
                EXPECT_GE(a, 3);
            }
        }
    }
    EXPECT_GT(forms, 100);
}

TEST(TheoremForm, AbsentForPartOneOrNonPowerEven) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto raw = oracle::random_parts(rng, 3 + trial % 15, 2);
        const int bad = (trial % 2) ? 1 : 2 * (3 + 2 * (trial % 5)); // 1, or 6, 10, 14, 18, 22
        raw.push_back(bad);
        EXPECT_FALSE(theorem_form_of(make_partition(raw))) << to_string(make_partition(raw));
    }
}
