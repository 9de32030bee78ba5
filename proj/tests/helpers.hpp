#pragma once

#include <utility>
#include <vector>

#include "polarkit/channel.hpp"
#include "polarkit/scalar.hpp"

namespace polarkit::testing {

inline Scalar Q(long num, long den = 1) { return Scalar::exact(num, den); }

// w1 B(e1) + w2 B(e2) [+ w3 B(e3)], all exact fractions.
inline SymmetricChannel mix2(long w1n, long w1d, long e1n, long e1d, long w2n, long w2d, long e2n,
                             long e2d) {
    std::vector<std::pair<Scalar, SymmetricChannel>> parts;
    parts.emplace_back(Q(w1n, w1d), make_bsc(Q(e1n, e1d)));
    parts.emplace_back(Q(w2n, w2d), make_bsc(Q(e2n, e2d)));
    return mix(parts);
}

}  // namespace polarkit::testing
