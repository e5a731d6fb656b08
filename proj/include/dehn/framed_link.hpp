#pragma once

#include "dehn/int_matrix.hpp"
#include "dehn/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dehn {

// A surgery coefficient; nullopt encodes the infinity framing, which marks a
// component whose surgery is trivial (deletable).
using Framing = std::optional<Rational>;

inline bool is_infinite(const Framing& f) { return !f.has_value(); }

// Surgery presentation of a 3-manifold at the linking-matrix level: rational
// framings plus pairwise linking numbers. No crossing data is kept; moves
// that need isotopy information are asserted by callers.
struct FramedLink {
    std::vector<Framing> framings;
    std::vector<std::string> labels;  // optional, sized like framings or empty
    IntMatrix linking;                // symmetric, diagonal ignored

    std::size_t size() const { return framings.size(); }

    Int lk(std::size_t i, std::size_t j) const { return linking.at(i, j); }
    void set_lk(std::size_t i, std::size_t j, const Int& v) {
        linking.at(i, j) = v;
        linking.at(j, i) = v;
    }

    std::string label(std::size_t i) const;

    void validate() const;  // symmetry, sizes
};

FramedLink make_link(const std::vector<Framing>& framings,
                     const std::vector<std::tuple<std::size_t, std::size_t, Int>>& links,
                     const std::vector<std::string>& labels = {});

// JSON (de)serialization: {"components":[{"framing":"a/b"},...],
// "linking":[[...]]}; exact rationals as strings, infinity as "inf".
std::string to_json(const FramedLink& link);
FramedLink link_from_json(const std::string& text);

}  // namespace dehn
