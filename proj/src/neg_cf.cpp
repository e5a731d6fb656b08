#include "dehn/neg_cf.hpp"

#include <stdexcept>

namespace dehn {

Rational NegCF::eval() const {
    if (coefficients.empty()) throw std::domain_error("empty continued fraction");
    Rational acc(coefficients.back());
    for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it)
        acc = Rational(*it) - Rational(1) / acc;
    return acc;
}

NegCF neg_continued_fraction(const Rational& r) {
    if (r >= -1) throw std::domain_error("neg_continued_fraction: requires r < -1");
    NegCF cf;
    Rational x = r;
    for (;;) {
        Int a = floor_of(x);
        cf.coefficients.push_back(a);
        Rational frac = x - Rational(a);
        if (frac == 0) break;
        x = Rational(-1) / frac;  // again < -1, and denominators strictly shrink
    }
    return cf;
}

}  // namespace dehn
