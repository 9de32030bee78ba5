#include "doctest.h"
#include "helpers.hpp"
#include "polarkit/errors.hpp"
#include "polarkit/scalar.hpp"

using namespace polarkit;
using polarkit::testing::Q;

TEST_SUITE("scalar") {

TEST_CASE("exact arithmetic stays rational") {
    const Scalar a = Q(1, 3), b = Q(1, 6);
    CHECK((a + b) == Q(1, 2));
    CHECK((a - b) == Q(1, 6));
    CHECK((a * b) == Q(1, 18));
    CHECK((a / b) == Q(2));
    CHECK((a + b).is_exact());
    CHECK((a + b).str() == "1/2");
    CHECK(Q(2, 4) == Q(1, 2));  // normalized on construction
    CHECK(Q(3).str() == "3");
}

TEST_CASE("complement and powers") {
    CHECK(Q(1, 10).complement() == Q(9, 10));
    CHECK(Q(1, 10).pow(0) == Q(1));
    CHECK(Q(1, 10).pow(3) == Q(1, 1000));
    CHECK(Scalar::floating(0.5).pow(2).to_double() == doctest::Approx(0.25));
    CHECK(Scalar::zero(Mode::exact).pow(0) == Q(1));
}

TEST_CASE("predicates") {
    CHECK(Q(0).is_zero());
    CHECK(Q(1).is_one());
    CHECK(Q(1, 2).is_half());
    CHECK(Q(0).is_boundary());
    CHECK(Q(1).is_boundary());
    CHECK_FALSE(Q(1, 2).is_boundary());
    CHECK(Q(1, 2).in_unit_interval());
    CHECK_FALSE(Q(3, 2).in_unit_interval());
    CHECK_FALSE(Q(-1, 2).in_unit_interval());
}

TEST_CASE("mode mixing is rejected") {
    const Scalar e = Q(1, 2), f = Scalar::floating(0.5);
    CHECK_THROWS_AS((void)(e + f), UsageError);
    CHECK_THROWS_AS((void)(e == f), UsageError);
    CHECK_THROWS_AS(require_same_mode(Mode::exact, Mode::floating), UsageError);
    CHECK(require_same_mode(e, Q(1, 3)) == Mode::exact);
}

TEST_CASE("rational access guards") {
    CHECK(Q(3, 4).rational() == mpq_class(3, 4));
    CHECK_THROWS_AS(Scalar::floating(0.5).rational(), UsageError);
}

TEST_CASE("approx_equal tolerance only in floating mode") {
    CHECK(approx_equal(Scalar::floating(0.1), Scalar::floating(0.1 + 1e-15)));
    CHECK_FALSE(approx_equal(Scalar::floating(0.1), Scalar::floating(0.1 + 1e-9)));
    CHECK(approx_equal(Q(1, 3), Q(1, 3)));
    CHECK_FALSE(approx_equal(Q(1, 3), Q(1, 3) + Q(1, 1000000000000L)));
}

TEST_CASE("require_probability") {
    CHECK_NOTHROW(require_probability(Q(1, 2), "x"));
    CHECK_NOTHROW(require_probability(Q(0), "x"));
    CHECK_NOTHROW(require_probability(Q(1), "x"));
    CHECK_THROWS_AS(require_probability(Q(3, 2), "x"), UsageError);
    CHECK_THROWS_AS(require_probability(Scalar::floating(-0.1), "x"), UsageError);
}

}  // TEST_SUITE
