#include "dehn/families.hpp"

#include "dehn/kirby.hpp"
#include "dehn/spin_analysis.hpp"

#include <stdexcept>

namespace dehn {

namespace {

void check_params(long p, long n) {
    if (p < 2 || n < 1) throw std::invalid_argument("family parameters need p >= 2, n >= 1");
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::E: return "E";
        case Family::S: return "S";
        case Family::L: return "L";
        case Family::U: return "U";
    }
    return "?";
}

Int family_order(Family f, long p, long n) {
    check_params(p, n);
    Int P(p), N(n);
    switch (f) {
        case Family::E: return P * P * N - P * N - 1;
        case Family::S: return P * (P * N + 1) * (P * (N + 1) + 2) - P * (N + 1) - 1;
        case Family::L: return P * (P * N + 1) * (P * (N + 1) + 1);
        case Family::U: return P * P * P * N * (N + 1) + P * (P + 1) * (N + 1) + 1;
    }
    throw std::logic_error("unreachable");
}

Rational family_surgery_coefficient(Family f, long p, long n) {
    check_params(p, n);
    Int P(p), N(n);
    switch (f) {
        case Family::E: return Rational(P * P * N - P * N - 1);
        case Family::S:
            return Rational(P * (N * P + 1)) -
                   Rational(P * (N + 1) + 1, P * (N + 1) + 2);
        case Family::U: return Rational(P * P * N + P + 1) + Rational(1, P * (N + 1));
        case Family::L: break;
    }
    throw std::invalid_argument("family L is not a single surgery");
}

FramedLink e_family_seifert_link(long p, long n) {
    check_params(p, n);
    Int P(p), N(n);
    return make_link({Rational(0), Rational(P), Rational(-(P * N + 1), N),
                      Rational(-(P * (N + 1) + 1))},
                     {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}, {"f0", "f1", "f2", "f3"});
}

FramedLink s_family_link(long p, long n) {
    check_params(p, n);
    Int P(p), N(n);
    return make_link({Rational(N), Rational(-P), Rational(P), Rational(-(P * (N + 1) + 1)),
                      Rational(1)},
                     {{0, 1, 1}, {1, 4, 1}, {2, 4, 1}, {3, 4, 1}},
                     {"a1", "a2", "b", "c", "d"});
}

FramedLink minus_l_family_link(long p, long n) {
    check_params(p, n);
    Int P(p), N(n);
    return make_link({Rational(-N), Rational(P), Rational(-P), Rational(P * (N + 1) + 1),
                      Rational(-1), Rational(0)},
                     {{0, 1, -1}, {1, 4, -1}, {2, 4, -1}, {3, 4, -1}, {4, 5, -1}},
                     {"a1", "a2", "b", "c", "d", "K"});
}

FramedLink single_surgery_link(const Rational& r) {
    return make_link({Framing(r)}, {}, {"K0"});
}

ManifoldFamilyRecord family_record(Family f, long p, long n) {
    check_params(p, n);
    ManifoldFamilyRecord rec;
    rec.family = f;
    rec.p = p;
    rec.n = n;
    rec.h = family_order(f, p, n);

    Int presented;
    switch (f) {
        case Family::E: {
            rec.surgery_coefficient = family_surgery_coefficient(f, p, n);
            presented = h1_order(e_family_seifert_link(p, n));
            break;
        }
        case Family::S: {
            rec.surgery_coefficient = family_surgery_coefficient(f, p, n);
            presented = h1_order(s_family_link(p, n));
            break;
        }
        case Family::U: {
            rec.surgery_coefficient = family_surgery_coefficient(f, p, n);
            presented = h1_order(single_surgery_link(*rec.surgery_coefficient));
            break;
        }
        case Family::L: {
            presented = h1_order(minus_l_family_link(p, n));
            rec.lens_summands = derive_lens_summands(p, n);
            Int product(1);
            for (const auto& l : rec.lens_summands) product *= l.p;
            if (product != rec.h)
                throw std::logic_error("family_record: lens summand orders disagree with closed form");
            break;
        }
    }
    if (presented != rec.h)
        throw std::logic_error("family_record: presentation order disagrees with closed form");
    if (rec.surgery_coefficient) {
        Int nr = num(*rec.surgery_coefficient);
        if ((nr < 0 ? Int(-nr) : nr) != rec.h)
            throw std::logic_error("family_record: |numerator| of coefficient disagrees with order");
    }
    return rec;
}

Int slice_genus_torus_knot(long p, long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus knot needs p, q >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
    return Int(p - 1) * Int(q - 1) / 2;
}

bool is_lspace_surgery(long p, long q, const Rational& r, bool strict) {
    Int bound = 2 * slice_genus_torus_knot(p, q) - 1;
    return strict ? r > Rational(bound) : r >= Rational(bound);
}

std::pair<Int, Int> legendrian_invariants(const LegendrianData& d) {
    if (d.up_cusps < 0 || d.down_cusps < 0)
        throw std::invalid_argument("cusp counts must be nonnegative");
    Int total = d.up_cusps + d.down_cusps;
    if (total % 2 != 0 || total < 2)
        throw std::invalid_argument("a closed front has an even, positive cusp total");
    Int tb = d.writhe - total / 2;
    Int rot = (d.down_cusps - d.up_cusps) / 2;
    return {tb, rot};
}

}  // namespace dehn
