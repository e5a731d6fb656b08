#include "dehn/chern.hpp"

#include "dehn/families.hpp"
#include "dehn/kirby.hpp"

#include <stdexcept>

namespace dehn {

Int chern_class_reduction(long p, long n) {
    if (p % 2 == 0) throw std::invalid_argument("chern_class_reduction: p must be odd");
    if (p < 3 || n < 1) throw std::invalid_argument("chern_class_reduction: need odd p >= 3, n >= 1");

    HomologyPresentation pres = presentation(s_family_link(p, n));
    auto residues = generator_reduction(pres, "d");
    Int h = family_order(Family::S, p, n);

    Int value = -residues.at("a2") - residues.at("b") +
                Int(p) * Int(n + 1) * residues.at("c") - residues.at("d");
    return mod(value, h);
}

}  // namespace dehn
