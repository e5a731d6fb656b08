#pragma once

#include "dehn/int_matrix.hpp"

#include <cstdint>
#include <vector>

namespace dehn {

// Characteristic covectors on a negative-definite form G: integer vectors K
// with K_i = G_ii (mod 2), taken modulo 2*G*Z^s. Each class is a spin^c
// structure on the boundary of the associated 4-manifold, and for fillings
// reachable from a canonical linear plumbing by blowups its correction term
// equals max (K^2 + s)/4 over the class, where K^2 = K^T G^-1 K.

struct CharClassResult {
    Rational d;
    std::vector<Int> maximizer;
};

// Exact maximization of the concave class function: the problem is a
// closest-vector search for the positive-definite form -4G around a rational
// center, done with an LDL^T split and depth-first bounding. Deterministic.
CharClassResult correction_term_class_max(const IntMatrix& g, const std::vector<Int>& k0);

// Solutions x of G x = diag(G) (mod 2), lexicographically sorted. These are
// the characteristic sublinks of the presentation; G*x are the spin classes.
std::vector<std::vector<std::uint8_t>> characteristic_sublinks(const IntMatrix& g);

// Covector representing the canonical spin class (lex-least sublink).
std::vector<Int> spin_covector(const IntMatrix& g);

// Representative of the class labeled c in the conjugation-equivariant
// scheme: spin + 2c * e_1. For a slam-dunk chain e_1 is the meridian of the
// original surgery component, a generator of the boundary homology.
std::vector<Int> label_covector(const IntMatrix& g, const Int& c);

// Convenience: correction term of the class labeled c.
Rational correction_term_label(const IntMatrix& g, const Int& c);

}  // namespace dehn
