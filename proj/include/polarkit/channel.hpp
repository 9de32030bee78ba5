#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polarkit/scalar.hpp"

namespace polarkit {

// One binary-symmetric piece of a symmetric channel. A symmetric binary-input
// channel behaves like a random switch that, with probability `weight`, routes
// the input through a BSC with crossover `eps` and tells the receiver which
// branch fired.
struct BscComponent {
    Scalar eps;     // in [0, 1/2] once canonical
    Scalar weight;  // positive; a channel's weights sum to 1
};

// A symmetric binary-input channel in canonical component form: eps strictly
// increasing within [0, 1/2], weights positive and summing to 1 (exactly in
// exact mode, to within kSumTolerance in floating mode, renormalized). All
// instances are produced via canonicalize()/make_*, so the invariant holds by
// construction.
class SymmetricChannel {
public:
    Mode mode() const { return mode_; }
    const std::vector<BscComponent>& components() const { return comps_; }
    std::size_t size() const { return comps_.size(); }

private:
    SymmetricChannel(std::vector<BscComponent> comps, Mode mode)
        : comps_(std::move(comps)), mode_(mode) {}

    std::vector<BscComponent> comps_;
    Mode mode_ = Mode::exact;

    friend struct ChannelFactory;
};

// Probability masses of the likelihood statistic eps(y) = P(y|1) / (P(y|0) +
// P(y|1)) under a uniform input: `points` is sorted by increasing eps over
// [0,1], masses are positive and sum to 1. Two channels are interchangeable
// for any decoding purpose exactly when their profiles coincide.
struct LikelihoodRatioProfile {
    std::vector<std::pair<Scalar, Scalar>> points;  // (eps, mass)
    Mode mode = Mode::exact;
};

// An explicit finite-output binary-input channel: output y has transition
// probabilities p0[y] = P(y|0), p1[y] = P(y|1); each row sums to 1. Product
// constructions can leave outputs with p0 = p1 = 0; profile extraction skips
// them.
struct GeneralChannel {
    std::vector<Scalar> p0, p1;
    Mode mode = Mode::exact;
    std::size_t size() const { return p0.size(); }
};

// --- construction -----------------------------------------------------------

// Validates (eps in [0,1], weights >= 0 summing to 1) and canonicalizes an
// arbitrary component list: folds eps > 1/2 onto 1-eps, sorts, merges equal
// (floating: nearby) eps, drops zero weights. Throws UsageError on violations.
SymmetricChannel canonicalize(std::vector<BscComponent> comps, Mode mode);

SymmetricChannel make_bsc(const Scalar& eps);

// Erasure channel with erasure probability q, i.e. (1-q) B(0) + q B(1/2).
SymmetricChannel make_bec(const Scalar& erasure);

// Convex mixture of symmetric channels; weights must sum to 1.
SymmetricChannel mix(std::span<const std::pair<Scalar, SymmetricChannel>> parts);

// --- profiles ---------------------------------------------------------------

LikelihoodRatioProfile lrp(const SymmetricChannel& w);

// Profile of an explicit table; validates that rows sum to 1.
LikelihoodRatioProfile lrp_from_table(const GeneralChannel& t);

// A profile is symmetric when the mass at eps equals the mass at 1-eps for
// every point. Symmetric profiles are exactly those realizable by a
// SymmetricChannel.
bool is_symmetric(const LikelihoodRatioProfile& p);

// Rebuilds the canonical component form from a symmetric profile; throws
// UsageError if the profile is not symmetric.
SymmetricChannel channel_from_profile(const LikelihoodRatioProfile& p);

bool equivalent(const SymmetricChannel& a, const SymmetricChannel& b);
bool equivalent(const LikelihoodRatioProfile& a, const LikelihoodRatioProfile& b);

// --- figures of merit -------------------------------------------------------

// Mutual information with a uniform input, in bits.
double capacity(const SymmetricChannel& w);
double capacity(const LikelihoodRatioProfile& p);

// Probability that optimal single-use detection errs (ties broken in favor of
// an error): sum of w * eps over components. Exact in exact mode.
Scalar p_error(const SymmetricChannel& w);
Scalar p_error(const LikelihoodRatioProfile& p);

double bhattacharyya(const SymmetricChannel& w);
double bhattacharyya(const LikelihoodRatioProfile& p);

// --- quantization -----------------------------------------------------------

// Reduces the component count to at most max_components by repeatedly merging
// the adjacent pair whose replacement by its weighted mean loses the least
// capacity (ties toward the pair with the smaller lower eps). The result is a
// degraded version of w: every merge is a channel the receiver could simulate
// by forgetting which of the two branches fired.
SymmetricChannel degrade_merge(const SymmetricChannel& w, std::size_t max_components);

namespace detail {

// Floating-mode fast path shared by the transforms and the construction tree:
// plain (eps, weight) pairs, canonicalized/merged without Scalar wrapping.
struct RawComp {
    double eps;
    double w;
};
using RawList = std::vector<RawComp>;

RawList raw_of(const SymmetricChannel& w);     // floating mode only
void canonicalize_raw(RawList& comps);         // fold + snap + sort + cluster + renorm
void degrade_raw(RawList& comps, std::size_t max_components);
SymmetricChannel materialize(const RawList& comps);  // trusts canonical form

// Canonicalizes a list whose weights are already known to sum to 1 (transform
// outputs); skips input validation.
SymmetricChannel canonical_unchecked(std::vector<BscComponent> comps, Mode mode);

}  // namespace detail

}  // namespace polarkit
