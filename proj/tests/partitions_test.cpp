#include <gtest/gtest.h>

#include "intertwine/canonical.hpp"
#include "intertwine/field_create.hpp"
#include "intertwine/partitions.hpp"
#include "test_support.hpp"

using namespace intertwine;
namespace ts = intertwine::test_support;

namespace {

std::int64_t minsum_of(std::initializer_list<Partition> ps) {
    const std::vector<Partition> v(ps);
    return minsum(v);
}

std::int64_t conjprod_of(std::initializer_list<Partition> ps) {
    const std::vector<Partition> v(ps);
    return conjprod(v);
}

}  // namespace

TEST(Partition, Construction) {
    EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
    EXPECT_TRUE(Partition().empty());
    EXPECT_EQ(Partition::from_unsorted({1, 3, 0, 2}).parts(), (std::vector<int>{3, 2, 1}));
    EXPECT_THROW(Partition({1, 2}), Error);
    EXPECT_THROW(Partition({2, -1}), Error);
    const Partition p({5, 3, 3, 1});
    EXPECT_EQ(p.weight(), 12);
    EXPECT_EQ(p.part(1), 5);
    EXPECT_EQ(p.part(5), 0);
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate(Partition({5, 3, 3, 1})), Partition({4, 3, 3, 1, 1}));
    EXPECT_EQ(conjugate(Partition()), Partition());
    EXPECT_EQ(conjugate(Partition({4})), Partition::ones(4));
}

TEST(Conjugate, InvolutionPreservingWeight) {
    ts::Rng rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition p = ts::random_partition(static_cast<int>(rng() % 41), rng);
        const Partition c = conjugate(p);
        EXPECT_EQ(conjugate(c), p);
        EXPECT_EQ(c.weight(), p.weight());
        // lambda'_i counts parts that are at least i
        for (int i = 1; i <= p.largest(); ++i) {
            int count = 0;
            for (int part : p.parts()) count += part >= i;
            EXPECT_EQ(c.part(static_cast<std::size_t>(i)), count);
        }
    }
}

TEST(Minsum, Examples) {
    EXPECT_EQ(minsum_of({Partition({2, 1}), Partition({2})}), 3);
    EXPECT_EQ(minsum_of({Partition::ones(4), Partition::ones(3)}), 12);
    EXPECT_EQ(minsum_of({Partition({2, 1}), Partition({2, 1}), Partition({2, 1})}), 9);
    EXPECT_EQ(minsum_of({Partition({2, 1}), Partition()}), 0);
    EXPECT_THROW(minsum(std::span<const Partition>()), Error);
}

TEST(Conjprod, Examples) {
    EXPECT_EQ(conjprod_of({Partition({2, 1}), Partition({2})}), 3);
    EXPECT_EQ(conjprod_of({Partition({5, 3, 3, 1})}), 12);
    EXPECT_EQ(conjprod_of({Partition({2, 1}), Partition({2, 1}), Partition({2, 1})}), 9);
    try {
        conjprod(std::span<const Partition>());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmptyList);
    }
}

TEST(Conjprod, MatchesLiteralMultiSum) {
    ts::Rng rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Partition> ps;
        const std::size_t count = 1 + rng() % 4;
        for (std::size_t i = 0; i < count; ++i) ps.push_back(ts::random_partition(static_cast<int>(rng() % 31), rng));
        EXPECT_EQ(conjprod(ps), ts::minsum_literal(ps));
        EXPECT_EQ(minsum(ps), ts::minsum_literal(ps));
    }
}

TEST(NilpotentPairDim, Examples) {
    EXPECT_EQ(nilpotent_pair_dim(Partition({3}), Partition({3})), 3);
    EXPECT_EQ(nilpotent_pair_dim(Partition::ones(3), Partition::ones(4)), 12);
    EXPECT_EQ(nilpotent_pair_dim(Partition({2, 1}), Partition({2})), 3);
}

TEST(NilpotentPairDim, MatchesLinearSystem) {
    for (std::uint64_t q : {2, 3}) {
        const Field f = field_create(q, 1);
        for (int r = 1; r <= 6; ++r) {
            ts::Rng rng(static_cast<std::uint64_t>(r) * 17 + q);
            for (int trial = 0; trial < 12; ++trial) {
                const Partition lambda = ts::random_partition(r, rng);
                const Partition mu = ts::random_partition(1 + static_cast<int>(rng() % 6), rng);
                const auto expected = ts::intertwiner_dim_linear_system(nilpotent_matrix(f, lambda), nilpotent_matrix(f, mu));
                EXPECT_EQ(nilpotent_pair_dim(lambda, mu), static_cast<std::int64_t>(expected))
                    << lambda.to_string() << " " << mu.to_string();
            }
        }
    }
}

TEST(NilpotentPairDim, Sandwich) {
    ts::Rng rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition lambda = ts::random_partition(1 + static_cast<int>(rng() % 12), rng);
        const Partition mu = ts::random_partition(1 + static_cast<int>(rng() % 12), rng);
        const auto dim = nilpotent_pair_dim(lambda, mu);
        EXPECT_LE(static_cast<std::int64_t>(lambda.length() * mu.length()), dim);
        EXPECT_LE(dim, static_cast<std::int64_t>(lambda.weight()) * mu.weight());
    }
}
