#pragma once

#include <cstddef>

#include "polarkit/bits.hpp"
#include "polarkit/channel.hpp"

namespace polarkit::oracle {

// Output-count ceiling for table products. Tables square (and double) per
// step, so anything past a few steps needs an explicit larger budget.
inline constexpr std::size_t kDefaultBudget = 2'000'000;

// Explicit transition table of a symmetric channel. Every component, the
// eps = 1/2 ones included, contributes its two branch outputs, so the table
// has exactly twice as many outputs as the channel has components.
GeneralChannel table_of(const SymmetricChannel& w);

// One combining step on explicit tables, by direct enumeration of the output
// tuples -- no likelihood bookkeeping anywhere, which is the point: results
// here are trusted ground truth for the component-form transforms.
//
// minus: outputs are pairs (y0, y1), the input is the XOR share;
//   p0 = (a0[y0] b0[y1] + a1[y0] b1[y1]) / 2
//   p1 = (a1[y0] b0[y1] + a0[y0] b1[y1]) / 2
// plus: outputs are triples (y0, y1, u0) with the first input revealed;
//   p0 = a[u0][y0] b0[y1] / 2
//   p1 = a[1-u0][y0] b1[y1] / 2
GeneralChannel minus_table(const GeneralChannel& a, const GeneralChannel& b,
                           std::size_t budget = kDefaultBudget);
GeneralChannel plus_table(const GeneralChannel& a, const GeneralChannel& b,
                          std::size_t budget = kDefaultBudget);

// Folds alpha left to right starting from table_of(w), feeding the running
// table into both slots of each step.
GeneralChannel sequence_table(const BitSequence& alpha, const SymmetricChannel& w,
                              std::size_t budget = kDefaultBudget);

// Mutual information of an explicit table under a uniform input, in bits.
double mutual_information(const GeneralChannel& t);

}  // namespace polarkit::oracle
