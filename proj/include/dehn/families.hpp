#pragma once

#include "dehn/framed_link.hpp"
#include "dehn/lens.hpp"
#include "dehn/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dehn {

// The four 3-manifold families of interest, indexed by integers p > 1, n >= 1.
//
//   E: (p^2 n - p n - 1)-surgery on the (p, pn+1) torus knot; equivalently the
//      small Seifert fibered space with multiplicities (-1/p, n/(pn+1),
//      1/(p(n+1)+1)).
//   S: r-surgery on the same knot with r = p(np+1) - (p(n+1)+1)/(p(n+1)+2).
//   L: the connected sum of three lens spaces sitting in the surgery triangle
//      between S and E.
//   U: r-surgery with r = p^2 n + p + 1 + 1/(p(n+1)), the third corner of a
//      second triangle through L and E.
enum class Family { E, S, L, U };

const char* to_string(Family f);

struct ManifoldFamilyRecord {
    Family family;
    long p = 0, n = 0;
    Int h;  // order of the first homology group
    std::optional<Rational> surgery_coefficient;  // E, S, U
    std::vector<LensSpace> lens_summands;         // L only
};

// Closed-form |H1| for each family.
Int family_order(Family f, long p, long n);

Rational family_surgery_coefficient(Family f, long p, long n);

// Star-shaped presentation of E: a 0-framed unknot with three rationally
// framed meridians p, -(pn+1)/n, -(p(n+1)+1).
FramedLink e_family_seifert_link(long p, long n);

// Five-component presentation of S with curves a1, a2, b, c, d; d is a hub
// meridian-linked to a2, b, c and a1 hangs off a2.
FramedLink s_family_link(long p, long n);

// Six-component presentation of -L: the orientation reverse of the S link
// plus a 0-framed meridian K of the (-1)-framed curve d. Blowing down d and
// then K splits it into three lens-space pieces.
FramedLink minus_l_family_link(long p, long n);

// Single-component rational surgery presentation.
FramedLink single_surgery_link(const Rational& r);

// Builds the record and recomputes h from a surgery presentation; throws on
// disagreement with the closed form.
ManifoldFamilyRecord family_record(Family f, long p, long n);

// (p-1)(q-1)/2 for coprime p, q >= 2.
Int slice_genus_torus_knot(long p, long q);

// r-surgery on the (p,q) torus knot has Heegaard Floer rank |H1| exactly when
// r clears 2g-1; the boundary case holds by the lens-space surgery argument,
// so equality is accepted unless strict is requested.
bool is_lspace_surgery(long p, long q, const Rational& r, bool strict = false);

// Front-projection data of a Legendrian knot.
struct LegendrianData {
    Int writhe;
    Int up_cusps;
    Int down_cusps;
};

// (tb, rot) = (writhe - (cu+cd)/2, (cd-cu)/2); rejects odd cusp totals.
std::pair<Int, Int> legendrian_invariants(const LegendrianData& d);

}  // namespace dehn
