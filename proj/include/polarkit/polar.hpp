#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "polarkit/bits.hpp"
#include "polarkit/channel.hpp"

namespace polarkit {

inline constexpr unsigned kGeneratorOrderLimit = 12;
inline constexpr unsigned kConstructOrderLimit = 20;

// Big-endian integer value of a bit sequence: the leftmost bit is the most
// significant. This is the code-tree index of the leaf reached by the path.
std::uint64_t index_of_bits(const BitSequence& alpha);

// The set of input positions delta whose data bit is XORed into code bit
// x_alpha: position i of delta is forced to 1 wherever bit k-1-i of alpha is
// 1 and free otherwise. Returned in ascending index order.
std::vector<BitSequence> contributing_indices(const BitSequence& alpha);

// The 2^k x 2^k binary encoding matrix: entry (delta-row, alpha-column) is 1
// exactly when delta contributes to x_alpha. Rows and columns are ordered by
// ascending index. Self-inverse over GF(2).
struct GeneratorMatrix {
    unsigned k = 0;
    std::vector<std::vector<std::uint8_t>> rows;
};

GeneratorMatrix generator_matrix(unsigned k);

// x = u G_k over GF(2); u must have length 2^k with entries in {0,1}.
std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& u, unsigned k);

// --- construction ------------------------------------------------------------

struct IndexRecord {
    BitSequence alpha;
    std::uint64_t index = 0;
    double capacity = 0.0;
    Scalar p_error;
    double bhattacharyya = 0.0;
    std::uint64_t components = 0;  // canonical component count of the channel
    bool quantized = false;        // some merge fired on this path
};

struct ConstructOptions {
    // Merge down to at most this many components after every transform step.
    std::optional<std::size_t> cap;
    // Hard ceiling on per-channel component counts (mainly for uncapped exact
    // runs, which can blow up combinatorially).
    std::size_t budget = 1'000'000;
};

struct ConstructionResult {
    unsigned k = 0;
    std::vector<IndexRecord> records;  // ascending index, one per leaf
    std::vector<bool> frozen;          // empty until a selection is made
};

// Evaluates the full depth-k synthesis tree over w: each node's channel feeds
// both slots of the minus/plus step toward its two children. Metrics are
// computed at the leaves. With `cap` set the result is a degraded (pessimistic)
// stand-in for the true tree wherever `quantized` is flagged.
ConstructionResult construct(const SymmetricChannel& w, unsigned k,
                             const ConstructOptions& opts = {});

enum class ReliabilityMetric { p_error, bhattacharyya };

// Frozen mask (true = frozen) keeping the info_count most reliable indices as
// information positions. Ties freeze the smaller index.
std::vector<bool> select_frozen(const ConstructionResult& result, std::size_t info_count,
                                ReliabilityMetric metric = ReliabilityMetric::p_error);

// --- combinatorial accounting ------------------------------------------------

// The run-length recursion
//   f(uniform run of length l)  = (2^l)! 2^(2^l)
//   f(prefix + closing run r^l) = (2^l)! f(prefix)^(2^l)
// which lower-bounds (after halving) the average number of raw transform-tree
// outputs sharing one likelihood ratio. Grows doubly exponentially; sequences
// longer than 16 bits are refused.
mpz_class collision_factor(const BitSequence& alpha);

struct SupportBound {
    BitSequence alpha;
    std::uint64_t observed = 0;  // canonical component count of a_seq(alpha, w)
    std::uint64_t bound = 0;
    bool ok = false;
};

struct SupportBoundReport {
    std::vector<SupportBound> entries;
    bool all_ok = true;
};

// Checks the closed-form component-count bounds for every transform sequence
// of length <= depth (depth at most 2; deeper bounds are not known in closed
// form). Requires exact mode and a channel made of n strictly informative
// components plus exactly one eps = 1/2 component.
SupportBoundReport support_bound_check(const SymmetricChannel& w, unsigned depth = 2);

// Per-index Bhattacharyya upper bounds from z0 = Z(W): a minus step maps
// z to 2z - z^2, a plus step to z^2. Exact for erasure channels, an upper
// bound in general. Entry index follows index_of_bits of the path.
std::vector<double> bhattacharyya_bound_tree(double z0, unsigned k);

// --- serialization -----------------------------------------------------------

// Comma-separated table: index,alpha,capacity,p_error,bhattacharyya,
// components,frozen. An empty mask writes the frozen column as all 0.
void write_csv(std::ostream& os, const ConstructionResult& r);

// "01..." mask string, '1' = frozen, ascending index.
std::string mask_string(const std::vector<bool>& frozen);

}  // namespace polarkit
