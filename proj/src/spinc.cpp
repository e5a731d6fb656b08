#include "dehn/spinc.hpp"

#include <stdexcept>

namespace dehn {

void SpinCLabel::validate() const {
    if (h <= 0) throw std::invalid_argument("SpinCLabel: order must be positive");
    if (c < 0 || c >= h) throw std::invalid_argument("SpinCLabel: residue out of range");
}

SpinCLabel conjugate(const SpinCLabel& l) {
    l.validate();
    return SpinCLabel{l.h, mod(-l.c, l.h)};
}

bool is_spin(const SpinCLabel& l) {
    l.validate();
    return l.c == 0 || (l.h % 2 == 0 && l.c * 2 == l.h);
}

std::vector<SpinCLabel> spin_labels(const Int& h) {
    std::vector<SpinCLabel> out{SpinCLabel{h, 0}};
    if (h % 2 == 0) out.push_back(SpinCLabel{h, h / 2});
    return out;
}

Int spin_count(const HomologyPresentation& pres) {
    SnfResult snf = smith_normal_form(pres.relations);
    Int count = 1;
    for (const Int& d : snf.invariant_factors()) {
        if (d == 0) throw std::domain_error("spin_count: infinite H1");
        if (d % 2 == 0) count *= 2;
    }
    return count;
}

SpinFilterVerdict spin_component_filter(const SpinCLabel& source, const SpinCLabel& target,
                                        const std::vector<SpinCExtension>& extensions) {
    if (!is_spin(source) || !is_spin(target))
        throw std::invalid_argument("spin_component_filter: endpoints must be spin labels");
    for (const auto& e : extensions) {
        if (e.on_source.h != source.h || e.on_source.c != source.c ||
            e.on_target.h != target.h || e.on_target.c != target.c)
            throw std::invalid_argument("spin_component_filter: extension does not restrict to the endpoints");
        if (e.spin) return SpinFilterVerdict::Undetermined;
    }
    return SpinFilterVerdict::ForcedZero;
}

}  // namespace dehn
