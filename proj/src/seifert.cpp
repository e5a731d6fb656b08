#include "dehn/seifert.hpp"

#include <stdexcept>

namespace dehn {

namespace {

void check(long p, long n) {
    if (p < 2 || n < 1) throw std::invalid_argument("seifert data needs p >= 2, n >= 1");
}

Slope ratio(const Int& num_v, const Int& den_v) {
    if (den_v == 0) return std::nullopt;
    return Rational(num_v, den_v);
}

}  // namespace

SeifertTriple seifert_triple(long p, long n) {
    check(p, n);
    Int P(p), N(n);
    return SeifertTriple{Rational(-1, P), Rational(N, P * N + 1), Rational(1, P * (N + 1) + 1)};
}

std::array<GluingMatrix, 3> gluing_matrices(long p, long n) {
    check(p, n);
    Int P(p), N(n);
    GluingMatrix a1{P, -1, 1, 0};
    GluingMatrix a2{P * N + 1, P * N - P + 1, -N, 1 - N};
    GluingMatrix a3{P * (N + 1) + 1, 1, -1, 0};
    return {a1, a2, a3};
}

FiberSlopes slopes(long p, long n) {
    check(p, n);
    Int P(p), N(n);
    Int d2 = P * N - P + 1;
    if (d2 == 0) throw std::logic_error("slopes: degenerate v2 cannot occur for p>=2, n>=1");
    FiberSlopes s;
    s.v1 = Rational(P);
    s.v2 = Rational(-(P * N + 1), d2);
    s.v3 = Rational(-(P * (N + 1) + 1));
    s.c1 = Rational(1, P);
    s.c2 = Rational(-N, P * N + 1);
    s.c3 = Rational(-1, P * (N + 1) + 1);
    return s;
}

std::array<Slope, 3> boundary_slopes(long p, long n, const TwistState& t) {
    check(p, n);
    Int P(p), N(n);
    Slope b1 = ratio(t.m1, P * t.m1 - 1);
    Slope b2 = ratio(-(N * (t.m2 + 1) - 1), (P * N + 1) * t.m2 + P * (N - 1) + 1);
    Slope b3 = ratio(-t.m3, (P * (N + 1) + 1) * t.m3 + 1);
    return {b1, b2, b3};
}

}  // namespace dehn
