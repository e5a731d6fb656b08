#pragma once

#include "dehn/framed_link.hpp"
#include "dehn/smith.hpp"

#include <map>
#include <string>

namespace dehn {

// Integralized relation matrix: framings on the diagonal, linking numbers off
// it, one meridian generator per component. |H1| = |det| when nonzero.
struct HomologyPresentation {
    IntMatrix relations;
    std::vector<std::string> meridian_labels;
};

// Removes a (+-1)-framed unknotted component; the usual framing and linking
// corrections are applied to everything that linked it.
FramedLink blow_down(const FramedLink& link, std::size_t component);

// t twists along the disk of an unknotted component: its coefficient r
// becomes 1/(1/r + t), strands through it pick up t*(lk)^2 on framings and
// t*lk_i*lk_j on mutual linking. May produce the infinity sentinel.
FramedLink rolfsen_twist(const FramedLink& link, std::size_t component, const Int& t);

// Deletes an infinity-framed component (its surgery is trivial).
FramedLink delete_component(const FramedLink& link, std::size_t component);

// Replaces every rational framing by an integral slam-dunk chain, Rolfsen
// shifting into r < -1 first so all chain weights are <= -2. Infinity-framed
// components are deleted.
FramedLink integralize(const FramedLink& link);

HomologyPresentation presentation(const FramedLink& link);

// |H1| of the presented 3-manifold; 0 encodes infinite first homology.
Int h1_order(const FramedLink& link);
Int h1_order(const HomologyPresentation& pres);

// Every meridian class as a multiple of the chosen generator, reduced mod h.
// Throws "not cyclic" / "not a generator" when the hypotheses fail.
std::map<std::string, Int> generator_reduction(const HomologyPresentation& pres,
                                               const std::string& generator);

}  // namespace dehn
