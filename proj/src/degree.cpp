#include "dehn/degree.hpp"

#include "dehn/families.hpp"

#include <stdexcept>

namespace dehn {

Rational degree_shift(const CobordismData& c) {
    return (c.c1_square - Rational(3 * c.sigma) - Rational(2 * c.chi)) / 4;
}

Rational contact_d_correction(const CobordismData& c) {
    return (c.c1_square - Rational(3 * c.sigma) - Rational(2 * c.chi) + 2) / 4;
}

CobordismData spin_w_data() { return CobordismData{Int(-1), Int(1), Rational(0)}; }

Rational c1_square(TrianglePiece piece, const Int& k_or_l, long p, long n) {
    if (mod(k_or_l, Int(2)) != 1)
        throw std::invalid_argument("c1_square: multiplier must be odd");
    Int hs = family_order(Family::S, p, n);
    Int sq = k_or_l * k_or_l;
    switch (piece) {
        case TrianglePiece::V: return Rational(-sq * family_order(Family::L, p, n), hs);
        case TrianglePiece::MinusX: return Rational(-sq * family_order(Family::E, p, n), hs);
    }
    throw std::logic_error("unreachable");
}

RankIdentityReport rank_identities(long p, long n) {
    RankIdentityReport r;
    r.h_s = family_order(Family::S, p, n);
    r.h_e = family_order(Family::E, p, n);
    r.h_l = family_order(Family::L, p, n);
    r.h_u = family_order(Family::U, p, n);
    r.hs_equals_he_plus_hl = (r.h_s == r.h_e + r.h_l);
    r.hl_equals_he_plus_hu = (r.h_l == r.h_e + r.h_u);
    r.connecting_map_vanishes = r.hs_equals_he_plus_hl;
    r.second_triangle_map_vanishes = r.hl_equals_he_plus_hu;
    return r;
}

bool degree_collapse_identity(const Int& h_e, const Int& h_l, const Int& h_s) {
    if (h_s == 0) throw std::invalid_argument("degree_collapse_identity: hS must be nonzero");
    Rational width = (Rational(-h_l, h_s) + 1) / 4 + (Rational(-h_e, h_s) + 1) / 4;
    return width == Rational(1, 4);
}

bool degree_collapse_check(long p, long n) {
    return degree_collapse_identity(family_order(Family::E, p, n), family_order(Family::L, p, n),
                                    family_order(Family::S, p, n));
}

}  // namespace dehn
