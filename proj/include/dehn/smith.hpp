#pragma once

#include "dehn/int_matrix.hpp"

#include <vector>

namespace dehn {

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dk >= 0.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    std::vector<Int> invariant_factors() const;  // diagonal of d, in order
};

// Classical elimination with explicit transform accumulation. Total on any
// integer matrix; no modular shortcuts, so results are replayable.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace dehn
