#include <array>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "polarkit/prob_algebra.hpp"

using namespace polarkit;
using polarkit::testing::Q;

TEST_SUITE("prob_algebra") {

TEST_CASE("minus crossover basics") {
    CHECK(minus_crossover(Q(1, 10), Q(1, 5)) == Q(13, 50));
    CHECK(minus_crossover(Q(1, 10), Q(0)) == Q(1, 10));     // identity
    CHECK(minus_crossover(Q(1, 10), Q(1, 2)) == Q(1, 2));   // absorbing
    CHECK(minus_crossover(Q(1, 10), Q(1)) == Q(9, 10));     // flip
    CHECK(minus_crossover(Q(2, 5), Q(3, 10)) == minus_crossover(Q(3, 10), Q(2, 5)));
}

TEST_CASE("plus crossover basics") {
    // (1/10 * 1/5) / (1/10 * 1/5 + 9/10 * 4/5) = 2/100 / (74/100)
    CHECK(plus_crossover(Q(1, 10), Q(1, 5)) == Q(1, 37));
    CHECK(plus_crossover(Q(1, 10), Q(1, 2)) == Q(1, 10));  // identity
    CHECK(plus_crossover(Q(1, 10), Q(0)) == Q(0));         // pinned
    CHECK(plus_crossover(Q(1, 10), Q(1)) == Q(0));
    CHECK(plus_crossover(Q(2, 5), Q(3, 10)) == plus_crossover(Q(3, 10), Q(2, 5)));
}

TEST_CASE("bias product identity") {
    // 1 - 2(a * b) = (1 - 2a)(1 - 2b)
    const std::array<Scalar, 4> grid = {Q(0), Q(1, 7), Q(2, 5), Q(1, 2)};
    for (const Scalar& a : grid)
        for (const Scalar& b : grid) {
            const Scalar lhs = Q(1) - Q(2) * minus_crossover(a, b);
            const Scalar rhs = (Q(1) - Q(2) * a) * (Q(1) - Q(2) * b);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("powers match iterated folds") {
    for (long n = 0; n <= 5; ++n) {
        Scalar minus = Q(0), plus = Q(1, 2);
        for (long i = 0; i < n; ++i) {
            minus = minus_crossover(minus, Q(1, 10));
            plus = plus_crossover(plus, Q(1, 10));
        }
        CHECK(minus_crossover_power(Q(1, 10), n) == minus);
        CHECK(plus_crossover_power(Q(1, 10), n) == plus);
    }
}

TEST_CASE("plus power closed form") {
    // sigma^n / (sigma^n + (1-sigma)^n)
    CHECK(plus_crossover_power(Q(1, 10), 2) == Q(1, 82));
    CHECK(plus_crossover_power(Q(1, 3), 3) == Q(1, 9));
    CHECK(plus_crossover_power(Q(0), 0) == Q(1, 2));
    CHECK(plus_crossover_power(Q(0), 1) == Q(0));
    CHECK(plus_crossover_power(Q(1), 2) == Q(0));
}

TEST_CASE("branch weight") {
    const std::vector<Scalar> one = {Q(1, 10)};
    CHECK(branch_weight(one) == Q(1, 2));  // (1/10 + 9/10)/2
    const std::vector<Scalar> two = {Q(1, 10), Q(1, 5)};
    // (1/50 + 18/25)/2 = (2/100 + 72/100)/2 = 37/100
    CHECK(branch_weight(two) == Q(37, 100));
    const std::vector<Scalar> with_boundary = {Q(1, 10), Q(0), Q(1, 3)};
    CHECK(branch_weight(with_boundary) == Q(1, 8));  // 2^-3 once a boundary entry appears
}

TEST_CASE("branch weights over all sign choices sum to 1") {
    const std::array<Scalar, 3> sigma = {Q(1, 10), Q(1, 3), Q(2, 5)};
    Scalar total = Q(0);
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<Scalar> looks;
        for (unsigned i = 0; i < 3; ++i)
            looks.push_back(mask >> i & 1 ? sigma[i].complement() : sigma[i]);
        total = total + branch_weight(looks);
    }
    CHECK(total == Q(1));
}

TEST_CASE("combinatorics") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(4, 6) == 0);
    const std::vector<std::uint64_t> parts = {2, 1, 1};
    CHECK(multinomial(parts) == 12);  // 4!/2!
    CHECK(balls_in_boxes(3, 2) == 4);
    CHECK(balls_in_boxes(0, 5) == 1);
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(Q(1, 10)) == doctest::Approx(binary_entropy(0.1)));
}

}  // TEST_SUITE
