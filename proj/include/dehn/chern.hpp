#pragma once

#include "dehn/rational.hpp"

namespace dehn {

// First Chern class of the distinguished contact spin^c structure on S_{p,n},
// evaluated in the meridian basis of the five-component presentation and
// reduced against the generator mu_d: the rotation-number cocycle is
// -mu_{a2} - mu_b + p(n+1) mu_c - mu_d, and for odd p the reduction lands on
// the class of mu_d itself, residue 1 mod h_S. Even p is rejected.
Int chern_class_reduction(long p, long n);

}  // namespace dehn
