#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polarkit/channel.hpp"
#include "polarkit/oracle.hpp"

namespace polarkit::verify {

// Self-check suites behind the `verify` command. Each throws VerifyError
// describing the first counterexample; returning normally means the suite
// passed.

// Scalar crossover algebra: commutativity, associativity, identities,
// complement laws, power folds, branch-weight recurrence and completeness.
void algebra();

// Transform results against brute-force table enumeration for every bit
// sequence up to the given length. Exact mode only.
void oracle_agreement(std::span<const SymmetricChannel> channels, std::size_t depth,
                      std::size_t budget = oracle::kDefaultBudget);

// Combinatorial expansions and structured-pattern closed forms against the
// step-by-step transform route, plus the erasure fast path.
void closed_forms();

// The pair-resolution counting identity behind the closed forms:
// sum over s + 2b = 2^k - a of K(2^k; s, a+b, b) 2^s = C(2^(k+1), 2^k - a).
void counting_identity();

// Component-count bounds after one and two transform steps.
void support_bounds(std::span<const SymmetricChannel> channels);

// Standard exact-mode verification channels.
std::vector<SymmetricChannel> default_suite();

// Channels with n = 1..4 strictly informative components plus an eps = 1/2
// component, shaped for the component-count bound checks.
std::vector<SymmetricChannel> default_bound_suite();

}  // namespace polarkit::verify
