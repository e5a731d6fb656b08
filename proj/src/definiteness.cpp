#include "dehn/definiteness.hpp"

#include <stdexcept>
#include <vector>

namespace dehn {

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::NegativeDefinite: return "negative-definite";
        case Definiteness::PositiveDefinite: return "positive-definite";
        case Definiteness::Indefinite: return "indefinite";
        case Definiteness::Degenerate: return "degenerate";
    }
    return "?";
}

Inertia inertia(const IntMatrix& m) {
    if (!m.is_square() || !m.is_symmetric())
        throw std::invalid_argument("inertia: matrix must be symmetric");
    const std::size_t n = m.rows();
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(m.at(i, j));
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

    Inertia res;
    for (std::size_t k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, piv) == 0) ++piv;
            if (piv < n) {
                for (std::size_t t = 0; t < n; ++t) std::swap(at(k, t), at(piv, t));
                for (std::size_t t = 0; t < n; ++t) std::swap(at(t, k), at(t, piv));
            } else {
                // Whole remaining diagonal vanishes. Any off-diagonal entry
                // produces a hyperbolic pair after a symmetric row+col add.
                std::size_t hi = n, hj = n;
                for (std::size_t i = k; i < n && hi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (at(i, j) != 0) {
                            hi = i;
                            hj = j;
                            break;
                        }
                if (hi == n) {
                    res.zero += n - k;
                    return res;
                }
                for (std::size_t t = 0; t < n; ++t) at(hi, t) += at(hj, t);
                for (std::size_t t = 0; t < n; ++t) at(t, hi) += at(t, hj);
                if (hi != k) {
                    for (std::size_t t = 0; t < n; ++t) std::swap(at(k, t), at(hi, t));
                    for (std::size_t t = 0; t < n; ++t) std::swap(at(t, k), at(t, hi));
                }
            }
        }
        const Rational piv = at(k, k);
        if (piv > 0)
            ++res.positive;
        else
            ++res.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            Rational f = at(i, k) / piv;
            for (std::size_t t = 0; t < n; ++t) at(i, t) -= f * at(k, t);
            for (std::size_t t = 0; t < n; ++t) at(t, i) -= f * at(t, k);
        }
    }
    return res;
}

Definiteness definiteness(const IntMatrix& m) {
    Inertia in = inertia(m);
    const std::size_t n = m.rows();
    if (n == 0 || in.zero > 0) return Definiteness::Degenerate;
    if (in.negative == n) return Definiteness::NegativeDefinite;
    if (in.positive == n) return Definiteness::PositiveDefinite;
    return Definiteness::Indefinite;
}

}  // namespace dehn
