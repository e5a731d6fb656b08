#pragma once

#include "dehn/int_matrix.hpp"

namespace dehn {

enum class Definiteness { NegativeDefinite, PositiveDefinite, Indefinite, Degenerate };

const char* to_string(Definiteness d);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

// Exact signature of a symmetric integer form via rational congruence
// diagonalization. Rejects non-symmetric input.
Inertia inertia(const IntMatrix& m);

Definiteness definiteness(const IntMatrix& m);

}  // namespace dehn
