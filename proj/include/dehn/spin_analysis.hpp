#pragma once

#include "dehn/int_matrix.hpp"
#include "dehn/lens.hpp"
#include "dehn/rational.hpp"

#include <cstdint>
#include <vector>

namespace dehn {

// An integral presentation carrying characteristic sublinks through blowups
// and blowdowns, so spin structures can be followed across Kirby moves.
struct TrackedPresentation {
    IntMatrix m;  // framings on the diagonal, linking numbers off it
    std::vector<std::vector<std::uint8_t>> sublinks;

    // Removes a (+-1)-framed component by taking the Schur complement; the
    // tracked sublinks stay characteristic (asserted).
    void blow_down(std::size_t e);

    // Adds an eps-framed meridian of component y; y's framing moves by eps.
    void blow_up_meridian(std::size_t y, int eps);
};

// Spin data of the connected sum -L: the three lens summands read off the
// six-component presentation by blowing down the hub pair and slam-dunking,
// and the degrees of the two spin structures. tau_W is the spin structure
// whose characteristic sublink contains the triangle knot K (the one that
// extends over the cobordism W but not over V); tau_V is the other.
struct MinusLSpinAnalysis {
    std::vector<LensSpace> summands;  // block order: (a1,a2)-chain, b, c
    Rational d_tau_V;
    Rational d_tau_W;
};

MinusLSpinAnalysis analyze_minus_l(long p, long n);

// The three lens summands with q-parameters derived by continued fractions
// from the presentation, never hardcoded.
std::vector<LensSpace> derive_lens_summands(long p, long n);

}  // namespace dehn
