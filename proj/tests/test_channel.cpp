#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "polarkit/channel.hpp"
#include "polarkit/errors.hpp"

using namespace polarkit;
using polarkit::testing::Q;
using polarkit::testing::mix2;

TEST_SUITE("channel") {

TEST_CASE("canonicalize folds, sorts and merges") {
    std::vector<BscComponent> comps = {
        {Q(9, 10), Q(1, 4)},  // folds onto 1/10
        {Q(1, 10), Q(1, 4)},
        {Q(1, 2), Q(1, 4)},
        {Q(1, 2), Q(1, 4)},
    };
    const SymmetricChannel ch = canonicalize(std::move(comps), Mode::exact);
    REQUIRE(ch.size() == 2);
    CHECK(ch.components()[0].eps == Q(1, 10));
    CHECK(ch.components()[0].weight == Q(1, 2));
    CHECK(ch.components()[1].eps == Q(1, 2));
    CHECK(ch.components()[1].weight == Q(1, 2));
}

TEST_CASE("canonicalize validates") {
    std::vector<BscComponent> bad_eps = {{Q(3, 2), Q(1)}};
    CHECK_THROWS_AS(canonicalize(std::move(bad_eps), Mode::exact), UsageError);
    std::vector<BscComponent> bad_sum = {{Q(1, 10), Q(1, 2)}};
    CHECK_THROWS_AS(canonicalize(std::move(bad_sum), Mode::exact), UsageError);
    std::vector<BscComponent> mixed = {{Q(1, 10), Scalar::floating(1.0)}};
    CHECK_THROWS_AS(canonicalize(std::move(mixed), Mode::exact), UsageError);
}

TEST_CASE("bec canonical form") {
    const SymmetricChannel bec = make_bec(Q(1, 3));
    REQUIRE(bec.size() == 2);
    CHECK(bec.components()[0].eps == Q(0));
    CHECK(bec.components()[0].weight == Q(2, 3));
    CHECK(bec.components()[1].eps == Q(1, 2));
    CHECK(bec.components()[1].weight == Q(1, 3));
    CHECK(make_bec(Q(0)).size() == 1);  // degenerates to B(0)
    CHECK(make_bec(Q(1)).size() == 1);  // degenerates to B(1/2)
}

TEST_CASE("profile round trip") {
    const SymmetricChannel ch = mix2(1, 2, 1, 8, 1, 2, 3, 8);
    const LikelihoodRatioProfile p = lrp(ch);
    REQUIRE(p.points.size() == 4);  // 1/8, 3/8, 5/8, 7/8
    CHECK(p.points.front().first == Q(1, 8));
    CHECK(p.points.back().first == Q(7, 8));
    CHECK(is_symmetric(p));
    CHECK(equivalent(channel_from_profile(p), ch));
}

TEST_CASE("table profile and symmetry verdict") {
    // Z-channel: input 1 flips with probability 1/2, input 0 never does.
    GeneralChannel z;
    z.mode = Mode::exact;
    z.p0 = {Q(1), Q(0)};
    z.p1 = {Q(1, 2), Q(1, 2)};
    const LikelihoodRatioProfile p = lrp_from_table(z);
    CHECK_FALSE(is_symmetric(p));
    CHECK_THROWS_AS(channel_from_profile(p), UsageError);

    // Explicit BSC(1/4) table is symmetric.
    GeneralChannel bsc;
    bsc.mode = Mode::exact;
    bsc.p0 = {Q(3, 4), Q(1, 4)};
    bsc.p1 = {Q(1, 4), Q(3, 4)};
    const LikelihoodRatioProfile q = lrp_from_table(bsc);
    CHECK(is_symmetric(q));
    CHECK(equivalent(channel_from_profile(q), make_bsc(Q(1, 4))));
}

TEST_CASE("row sums are validated") {
    GeneralChannel bad;
    bad.mode = Mode::exact;
    bad.p0 = {Q(1, 2), Q(1, 4)};
    bad.p1 = {Q(1, 2), Q(1, 2)};
    CHECK_THROWS_AS(lrp_from_table(bad), UsageError);
}

TEST_CASE("equivalence ignores representation") {
    // 1/2 B(1/4) + 1/2 B(1/4) collapses to B(1/4).
    const SymmetricChannel ch = mix2(1, 2, 1, 4, 1, 2, 3, 4);
    CHECK(equivalent(ch, make_bsc(Q(1, 4))));
    CHECK_FALSE(equivalent(ch, make_bsc(Q(1, 3))));
}

TEST_CASE("figures of merit") {
    CHECK(capacity(make_bsc(Q(0))) == doctest::Approx(1.0));
    CHECK(capacity(make_bsc(Q(1, 2))) == doctest::Approx(0.0));
    CHECK(capacity(make_bec(Q(1, 2))) == doctest::Approx(0.5));
    CHECK(bhattacharyya(make_bec(Q(1, 2))) == doctest::Approx(0.5));
    CHECK(bhattacharyya(make_bsc(Q(0))) == doctest::Approx(0.0));
    CHECK(p_error(make_bsc(Q(1, 10))) == Q(1, 10));
    CHECK(p_error(make_bec(Q(1, 2))) == Q(1, 4));
    // Z(B(eps)) = 2 sqrt(eps(1-eps))
    CHECK(bhattacharyya(make_bsc(Q(1, 10))) == doctest::Approx(0.6));
}

TEST_CASE("metrics agree between channel and profile routes") {
    const SymmetricChannel ch = mix2(2, 3, 1, 8, 1, 3, 2, 5);
    const LikelihoodRatioProfile p = lrp(ch);
    CHECK(capacity(ch) == doctest::Approx(capacity(p)));
    CHECK(p_error(ch) == p_error(p));
    CHECK(bhattacharyya(ch) == doctest::Approx(bhattacharyya(p)));
}

TEST_CASE("degrade_merge reduces size and capacity") {
    std::vector<std::pair<Scalar, SymmetricChannel>> parts;
    parts.emplace_back(Q(1, 4), make_bsc(Q(1, 10)));
    parts.emplace_back(Q(1, 4), make_bsc(Q(1, 5)));
    parts.emplace_back(Q(1, 4), make_bsc(Q(3, 10)));
    parts.emplace_back(Q(1, 4), make_bsc(Q(2, 5)));
    const SymmetricChannel ch = mix(parts);
    REQUIRE(ch.size() == 4);
    const SymmetricChannel merged = degrade_merge(ch, 2);
    CHECK(merged.size() <= 2);
    CHECK(capacity(merged) <= capacity(ch) + 1e-12);
    CHECK(p_error(merged) >= p_error(ch));
    // Merging cannot change the total error mass direction: weighted-mean
    // merges preserve p_error exactly.
    CHECK(p_error(merged) == p_error(ch));
}

TEST_CASE("degrade_merge is a no-op when already small") {
    const SymmetricChannel ch = make_bsc(Q(1, 4));
    CHECK(equivalent(degrade_merge(ch, 5), ch));
}

}  // TEST_SUITE
