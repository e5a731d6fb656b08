#pragma once

#include "dehn/rational.hpp"
#include "dehn/spinc.hpp"

#include <utility>
#include <vector>

namespace dehn {

// L(p,q) is -p/q surgery on the unknot, the boundary of the negative-definite
// linear plumbing on the negative continued fraction of -p/q. orientation -1
// denotes the reverse.
struct LensSpace {
    Int p;
    Int q;
    int orientation = 1;

    void validate() const;
};

// Correction term of the given spin^c structure, by the standard recursion
// with d(S^3) = 0. Labels use the conjugation-equivariant convention:
// conjugation negates c mod p and c = 0 is the canonical spin label.
// Orientation reversal negates.
Rational d_invariant_lens(const LensSpace& l, const SpinCLabel& label);

// Degrees add under connected sums.
Rational d_connected_sum(const std::vector<std::pair<LensSpace, SpinCLabel>>& summands);

}  // namespace dehn
