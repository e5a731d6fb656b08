#pragma once

#include "dehn/rational.hpp"

#include <vector>

namespace dehn {

// Negative continued fraction a1 - 1/(a2 - 1/(...)), all coefficients <= -2.
// This is the unique such expansion of a rational r < -1; it is what a
// slam-dunk chain of unknots realizing a rational surgery coefficient carries
// as framings.
struct NegCF {
    std::vector<Int> coefficients;

    Rational eval() const;
};

// Requires r < -1; rationals outside that range are first moved into it by an
// integer Rolfsen twist in the callers.
NegCF neg_continued_fraction(const Rational& r);

}  // namespace dehn
