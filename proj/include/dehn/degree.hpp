#pragma once

#include "dehn/rational.hpp"

namespace dehn {

// Algebraic topology of a spin^c cobordism: signature, Euler characteristic,
// and the square of the first Chern class.
struct CobordismData {
    Int sigma;
    Int chi;
    Rational c1_square;
};

// Grading change (c1^2 - 3*sigma - 2*chi)/4 induced on Floer degrees.
Rational degree_shift(const CobordismData& c);

// Homotopy degree of a contact plane field bounded by an almost-complex
// 4-manifold: (c1^2 - 3*sigma - 2*chi + 2)/4.
Rational contact_d_correction(const CobordismData& c);

// Data of the single spin 2-handle cobordism between the two distinguished
// spin structures: c1^2 = 0, sigma = -1, chi = 1, so the shift is 1/4.
CobordismData spin_w_data();

// The two 2-handle cobordisms of the main surgery triangle, from -L to -S
// and from -S to -E respectively.
enum class TrianglePiece { V, MinusX };

// Chern square of a spin^c structure restricting to the relevant spin label:
// -k^2*hL/hS on V and -l^2*hE/hS on -X, the multiplier always odd.
Rational c1_square(TrianglePiece piece, const Int& k_or_l, long p, long n);

struct RankIdentityReport {
    Int h_s, h_e, h_l, h_u;
    bool hs_equals_he_plus_hl = false;
    bool hl_equals_he_plus_hu = false;
    // Forced by exactness once the ranks add up.
    bool connecting_map_vanishes = false;       // -E -> -L in the main triangle
    bool second_triangle_map_vanishes = false;  // -E -> -U in the related one
};

RankIdentityReport rank_identities(long p, long n);

// The degree sandwich between the two spin structures has width
// (1/4)(-hL/hS+1) + (1/4)(-hE/hS+1); it collapses to exactly 1/4 precisely
// when hS = hE + hL.
bool degree_collapse_identity(const Int& h_e, const Int& h_l, const Int& h_s);
bool degree_collapse_check(long p, long n);

}  // namespace dehn
