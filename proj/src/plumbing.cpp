#include "dehn/plumbing.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace dehn {

using nlohmann::ordered_json;

void PlumbingGraph::validate() const {
    for (const auto& [a, b] : edges)
        if (a >= size() || b >= size() || a == b)
            throw std::invalid_argument("plumbing graph: bad edge");
}

PlumbingGraph build_w(long p, long n) {
    if (p < 2 || n < 1) throw std::invalid_argument("build_w needs p >= 2, n >= 1");
    PlumbingGraph g;
    auto add = [&](const Int& w) {
        g.weights.push_back(w);
        return g.weights.size() - 1;
    };
    std::size_t center = add(-2);
    std::size_t top = add(Int(-p));
    g.edges.emplace_back(center, top);
    std::size_t prev = center;
    for (long i = 0; i < p * (n + 1); ++i) {
        std::size_t v = add(-2);
        g.edges.emplace_back(prev, v);
        prev = v;
    }
    prev = center;
    for (long i = 0; i < p - 1; ++i) {
        std::size_t v = add(-2);
        g.edges.emplace_back(prev, v);
        prev = v;
    }
    std::size_t cap = add(Int(-n - 1));
    g.edges.emplace_back(prev, cap);
    return g;
}

Lattice intersection_matrix(const PlumbingGraph& g) {
    g.validate();
    Lattice l{IntMatrix(g.size(), g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) l.gram.at(i, i) = g.weights[i];
    for (const auto& [a, b] : g.edges) {
        l.gram.at(a, b) = 1;
        l.gram.at(b, a) = 1;
    }
    return l;
}

Rational nr_obstruction_sum(long p, long n) {
    if (p < 2 || n < 1) throw std::invalid_argument("nr_obstruction_sum needs p >= 2, n >= 1");
    Int P(p), N(n);
    return Rational(-2) + Rational(N * (P - 1) + 1, N * P + 1) + Rational(1, P) +
           Rational(P * (N + 1), P * (N + 1) + 1);
}

std::string to_json(const PlumbingGraph& g) {
    g.validate();
    ordered_json j;
    j["weights"] = ordered_json::array();
    for (const auto& w : g.weights) j["weights"].push_back(to_string(w));
    j["edges"] = ordered_json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    return j.dump();
}

PlumbingGraph plumbing_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    PlumbingGraph g;
    for (const auto& w : j.at("weights")) g.weights.push_back(Int(w.get<std::string>()));
    for (const auto& e : j.at("edges"))
        g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    g.validate();
    return g;
}

}  // namespace dehn
