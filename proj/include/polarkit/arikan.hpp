#pragma once

#include <cstdint>

#include "polarkit/bits.hpp"
#include "polarkit/channel.hpp"

namespace polarkit {

// Default ceiling on component counts produced while folding transform
// sequences; exceeding it raises ResourceError naming the offending prefix.
inline constexpr std::size_t kComponentBudget = 1'000'000;

// One polarization step on a pair of symmetric channels, in component form.
// The minus output sees the XOR of the two inputs; the plus output sees the
// second input with the first already resolved. Both distribute over the
// component switches:
//   minus: each component pair (e, u) x (s, v) yields one component
//          (minus_crossover(e, s), u v).
//   plus:  each pair yields two components,
//          (plus_crossover(e, s),        u v * (e s + (1-e)(1-s)))
//          (plus_crossover(e, 1-s),      u v * (e (1-s) + (1-e) s)).
SymmetricChannel transform_minus(const SymmetricChannel& w0, const SymmetricChannel& w1);
SymmetricChannel transform_plus(const SymmetricChannel& w0, const SymmetricChannel& w1);

// Left-to-right fold of alpha over w: each step feeds the running channel into
// both slots of the selected transform.
SymmetricChannel transform_sequence(const BitSequence& alpha, const SymmetricChannel& w,
                                    std::size_t budget = kComponentBudget);

// m-fold combine under the minus (resp. plus) transform, i.e. the channel
// seen by a bit XOR-shared across m independent uses (resp. repeated over m
// uses). m = 0 gives the perfect channel B(0) (resp. the useless B(1/2)).
SymmetricChannel minus_fold(const SymmetricChannel& w, std::uint64_t m);
SymmetricChannel plus_fold(const SymmetricChannel& w, std::uint64_t m);

// Folds of the three-way mixture p B(0) + q B(1/2) + (1-p-q) w, evaluated
// without forming the mixture: the noiseless/useless parts are absorbed into
// binomially weighted lower-order folds of w.
SymmetricChannel minus_fold_mixture(const SymmetricChannel& w, const Scalar& p, const Scalar& q,
                                    std::uint64_t t);
SymmetricChannel plus_fold_mixture(const SymmetricChannel& w, const Scalar& p, const Scalar& q,
                                   std::uint64_t t);

// Combinatorial expansions of the folds: the result is assembled from scalar
// crossover powers with multinomial weights, never by pairwise transforms, so
// these serve as an independent route to the same channels.
SymmetricChannel minus_fold_expansion(const SymmetricChannel& w, std::uint64_t m);
SymmetricChannel plus_fold_expansion(const SymmetricChannel& w, std::uint64_t m);

// Closed forms for the synthetic channels of structured index patterns over a
// BSC. Pattern shapes (with run lengths from PatternDims):
//   zeros                        0^l
//   zeros_ones                   0^l 1^(k+1)
//   zeros_one_zeros_ones         0^l 1 0^i 1^k
//   zeros_one_zeros_one_zeros    0^l 1 0^i 1 0^t
//   zeros_one_zeros_one_zeros_one  0^l 1 0^i 1 0^t 1
enum class IndexPattern {
    zeros,
    zeros_ones,
    zeros_one_zeros_ones,
    zeros_one_zeros_one_zeros,
    zeros_one_zeros_one_zeros_one,
};

struct PatternDims {
    std::uint64_t l = 0;
    std::uint64_t i = 0;
    std::uint64_t k = 0;
    std::uint64_t t = 0;
};

BitSequence pattern_bits(IndexPattern shape, const PatternDims& d);

// Channel of the given pattern over B(eps), assembled from the closed forms.
// eps at 0 or 1/2 short-circuits to B(eps); eps above 1/2 is folded first.
SymmetricChannel pattern_channel(IndexPattern shape, const PatternDims& d, const Scalar& eps);

// Erasure probability after folding alpha over an erasure channel with
// erasure probability q: a minus step maps p to 1-(1-p)^2, a plus step to p^2.
Scalar bec_erasure(const BitSequence& alpha, const Scalar& q);

namespace detail {

// Raw-pair kernels shared with the construction tree's floating fast path.
// `same` asserts the two lists are identical, halving work via symmetry.
RawList raw_minus_pairs(const RawList& a, const RawList& b, bool same);
RawList raw_plus_pairs(const RawList& a, const RawList& b, bool same);

}  // namespace detail

}  // namespace polarkit
