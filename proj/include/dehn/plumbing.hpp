#pragma once

#include "dehn/int_matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dehn {

// Weighted graph of a plumbing of disk bundles over spheres.
struct PlumbingGraph {
    std::vector<Int> weights;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t size() const { return weights.size(); }
    void validate() const;
};

struct Lattice {
    IntMatrix gram;
};

// Star-shaped plumbing bounding the orientation reverse of the E family:
// central -2 vertex with a single -p vertex, a chain of p(n+1) many -2's,
// and a chain of p-1 many -2's capped by -n-1. At (2,1) this degenerates to
// the E8 graph, which together with |det| = h_E pins the chain split.
PlumbingGraph build_w(long p, long n);

// Gram matrix: weights on the diagonal, 1 per edge.
Lattice intersection_matrix(const PlumbingGraph& g);

// The exact value of -2 + (n(p-1)+1)/(np+1) + 1/p + p(n+1)/(p(n+1)+1);
// negativity certifies that the capped plumbing is negative definite.
Rational nr_obstruction_sum(long p, long n);

std::string to_json(const PlumbingGraph& g);
PlumbingGraph plumbing_from_json(const std::string& text);

}  // namespace dehn
