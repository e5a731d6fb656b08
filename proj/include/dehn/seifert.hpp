#pragma once

#include "dehn/rational.hpp"

#include <array>
#include <optional>

namespace dehn {

// A slope on a torus identified with R^2/Z^2; nullopt is the infinite slope,
// which is meaningful (a vertical dividing set), not an error.
using Slope = std::optional<Rational>;

struct SeifertTriple {
    Rational a, b, c;
};

// Multiplicities of the Seifert model of E_{p,n}.
SeifertTriple seifert_triple(long p, long n);

struct GluingMatrix {
    Int a, b, c, d;  // row-major 2x2

    Int det() const { return a * d - b * c; }
};

// Boundary identifications of the three singular-fiber neighbourhoods; all
// three have determinant one and their first columns carry the surgery
// coefficients of the model diagram.
std::array<GluingMatrix, 3> gluing_matrices(long p, long n);

struct FiberSlopes {
    Rational v1, v2, v3;  // vertical: the regular fiber seen on each boundary
    Rational c1, c2, c3;  // critical: the meridian of each V_i
};

FiberSlopes slopes(long p, long n);

// Twisting numbers of the three Legendrian singular fibers; (0,-1,-1) is the
// normalized state every tight structure can be isotoped into.
struct TwistState {
    Int m1, m2, m3;
};

inline TwistState normalized_twist_state() { return TwistState{0, -1, -1}; }

// Boundary slopes of the fiber neighbourhoods at a given twist state.
std::array<Slope, 3> boundary_slopes(long p, long n, const TwistState& t);

}  // namespace dehn
