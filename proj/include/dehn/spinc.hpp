#pragma once

#include "dehn/kirby.hpp"
#include "dehn/rational.hpp"

#include <vector>

namespace dehn {

// A spin^c structure on a 3-manifold with cyclic H1 of order h, labeled so
// that conjugation is negation mod h. The spin structures are exactly the
// fixed points: c = 0, and c = h/2 when h is even.
struct SpinCLabel {
    Int h;
    Int c;

    void validate() const;
};

SpinCLabel conjugate(const SpinCLabel& l);
bool is_spin(const SpinCLabel& l);
std::vector<SpinCLabel> spin_labels(const Int& h);

// 2^(number of even invariant factors); rejects infinite H1.
Int spin_count(const HomologyPresentation& pres);

enum class SpinFilterVerdict { ForcedZero, Undetermined };

// A spin^c structure on a cobordism between two L-spaces, recorded through
// its restrictions plus whether it is spin.
struct SpinCExtension {
    SpinCLabel on_source;
    SpinCLabel on_target;
    bool spin = false;
};

// With Z/2 coefficients, non-spin extensions cancel in conjugate pairs, so a
// spin-to-spin component of a cobordism map vanishes unless some extension is
// itself spin. Source and target must be self-conjugate.
SpinFilterVerdict spin_component_filter(const SpinCLabel& source, const SpinCLabel& target,
                                        const std::vector<SpinCExtension>& extensions);

}  // namespace dehn
