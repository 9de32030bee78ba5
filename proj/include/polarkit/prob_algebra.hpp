#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>

#include "polarkit/scalar.hpp"

namespace polarkit {

// Scalar algebra on crossover probabilities. These two operations drive
// everything else in the library:
//
//   minus_crossover(a, b) -- error probability of the XOR of two independent
//   binary errors: a(1-b) + (1-a)b. Commutative and associative, identity 0,
//   absorbing element 1/2.
//
//   plus_crossover(a, b) -- posterior error probability after combining two
//   independent looks at the same bit: ab / (ab + (1-a)(1-b)). Defined as 0
//   when either argument is 0 or 1, since an errorless (or surely-errored)
//   look pins the bit. Commutative, identity 1/2.

Scalar minus_crossover(const Scalar& a, const Scalar& b);
Scalar plus_crossover(const Scalar& a, const Scalar& b);

// n-fold minus_crossover of eps with itself. The empty fold is the identity 0.
Scalar minus_crossover_power(const Scalar& eps, std::uint64_t n);

// n-fold plus_crossover of sigma with itself: 1/2 for n = 0, sigma for n = 1,
// and sigma^n / (sigma^n + (1-sigma)^n) for interior sigma (0 at the boundary
// once n >= 2).
Scalar plus_crossover_power(const Scalar& sigma, std::uint64_t n);

// Probability weight of the branch selected by the error pattern sigma when
// t = sigmas.size() independent looks are combined:
// (prod sigma_i + prod (1-sigma_i)) / 2 when every entry is interior, else
// 2^-t. Entries must lie in [0,1]; the list must be nonempty.
Scalar branch_weight(std::span<const Scalar> sigmas);

// m! / (parts[0]! * ... * parts[n-1]!) where m = sum of parts.
mpz_class multinomial(std::span<const std::uint64_t> parts);

mpz_class binomial(std::uint64_t n, std::uint64_t k);

// Number of ways to put m unlabeled balls into n labeled boxes: C(m+n-1, m).
mpz_class balls_in_boxes(std::uint64_t m, std::uint64_t n);

// h(eps) = -eps log2 eps - (1-eps) log2 (1-eps), with h(0) = h(1) = 0.
double binary_entropy(double eps);
double binary_entropy(const Scalar& eps);

}  // namespace polarkit
