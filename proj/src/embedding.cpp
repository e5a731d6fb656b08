#include "dehn/embedding.hpp"

#include "dehn/definiteness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dehn {

using nlohmann::ordered_json;

const char* to_string(EmbedStatus s) {
    switch (s) {
        case EmbedStatus::EmbeddingFound: return "embedding-found";
        case EmbedStatus::NoEmbedding: return "no-embedding-certificate";
        case EmbedStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

long isqrt_long(long v) {
    if (v <= 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Targets for Euclidean dot products under the negative-diagonal form:
// <v_i, v_j> = -gram_ij, reordered for the search.
struct Problem {
    std::size_t m = 0, ambient = 0;
    std::vector<std::vector<long>> target;  // m x m, search order
    std::vector<std::size_t> order;         // search position -> original index
    unsigned long long budget = 0;          // 0 = unlimited
};

struct Search {
    const Problem& prob;
    std::vector<std::vector<long>> placed;       // rows in search order
    std::vector<std::vector<long>> suffix_norm;  // per placed row, per column
    std::vector<long> cur;
    std::vector<long> dots;
    unsigned long long nodes = 0;
    bool out_of_budget = false;
    std::vector<std::vector<long>> solution;  // first one found, search order

    explicit Search(const Problem& p) : prob(p), cur(p.ambient) {}

    bool tick() {
        ++nodes;
        if (prob.budget && nodes > prob.budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // Column equivalence classes under the current placed rows: columns with
    // identical histories are interchangeable, so within a class candidate
    // entries are forced weakly decreasing, and on untouched columns (all
    // zero history) also nonnegative, killing the sign flips.
    std::vector<int> column_classes(bool& has_zero_class, int& zero_class) const {
        std::vector<int> cls(prob.ambient);
        std::vector<std::vector<long>> sig_of;
        for (std::size_t j = 0; j < prob.ambient; ++j) {
            std::vector<long> sig;
            for (const auto& row : placed) sig.push_back(row[j]);
            auto it = std::find(sig_of.begin(), sig_of.end(), sig);
            if (it == sig_of.end()) {
                sig_of.push_back(sig);
                cls[j] = static_cast<int>(sig_of.size()) - 1;
            } else {
                cls[j] = static_cast<int>(it - sig_of.begin());
            }
        }
        has_zero_class = false;
        zero_class = -1;
        for (std::size_t c = 0; c < sig_of.size(); ++c)
            if (std::all_of(sig_of[c].begin(), sig_of[c].end(), [](long v) { return v == 0; })) {
                has_zero_class = true;
                zero_class = static_cast<int>(c);
            }
        return cls;
    }

    bool place_rest(std::size_t k);

    // Enumerates canonical candidates for row k column by column.
    bool gen(std::size_t k, std::size_t col, long rem_norm, const std::vector<int>& cls,
             int zero_class, std::vector<long>& last) {
        const std::size_t nplaced = placed.size();
        if (col == prob.ambient) {
            if (rem_norm != 0) return false;
            for (std::size_t i = 0; i < nplaced; ++i)
                if (dots[i] != prob.target[k][i]) return false;
            placed.push_back(cur);
            suffix_norm.push_back(std::vector<long>(prob.ambient + 1, 0));
            for (std::size_t j = prob.ambient; j-- > 0;)
                suffix_norm.back()[j] = suffix_norm.back()[j + 1] + cur[j] * cur[j];
            bool done = place_rest(k + 1);
            placed.pop_back();
            suffix_norm.pop_back();
            return done;
        }
        // Cauchy-Schwarz on the remaining columns, exact in integers.
        for (std::size_t i = 0; i < nplaced; ++i) {
            long need = prob.target[k][i] - dots[i];
            if (static_cast<long long>(need) * need >
                static_cast<long long>(rem_norm) * suffix_norm[i][col])
                return false;
        }
        long cap = isqrt_long(rem_norm);
        long hi = std::min(cap, last[cls[col]]);
        long lo = (cls[col] == zero_class) ? 0 : -cap;
        for (long v = hi; v >= lo; --v) {
            if (!tick()) return false;
            if (v * v > rem_norm) continue;
            cur[col] = v;
            for (std::size_t i = 0; i < nplaced; ++i) dots[i] += placed[i][col] * v;
            long saved = last[cls[col]];
            last[cls[col]] = v;
            bool done = gen(k, col + 1, rem_norm - v * v, cls, zero_class, last);
            last[cls[col]] = saved;
            for (std::size_t i = 0; i < nplaced; ++i) dots[i] -= placed[i][col] * v;
            cur[col] = 0;
            if (done || out_of_budget) return done;
        }
        return false;
    }
};

bool Search::place_rest(std::size_t k) {
    if (k == prob.m) {
        solution = placed;
        return true;
    }
    bool has_zero;
    int zero_class;
    std::vector<int> cls = column_classes(has_zero, zero_class);
    int nclasses = 1 + *std::max_element(cls.begin(), cls.end());
    std::vector<long> last(nclasses, prob.target[k][k]);  // entries never exceed sqrt(norm)
    std::vector<long> saved_dots = std::move(dots);
    dots.assign(placed.size(), 0);
    bool done = gen(k, 0, prob.target[k][k], cls, zero_class, last);
    dots = std::move(saved_dots);
    return done;
}

Problem make_problem(const Lattice& l, std::size_t ambient, unsigned long long budget) {
    if (!l.gram.is_square() || !l.gram.is_symmetric())
        throw std::invalid_argument("embed_into_diagonal: Gram matrix must be symmetric");
    if (definiteness(l.gram) != Definiteness::NegativeDefinite)
        throw std::invalid_argument("embed_into_diagonal: lattice must be negative definite");
    const std::size_t m = l.gram.rows();
    if (ambient < m)
        throw std::invalid_argument("embed_into_diagonal: ambient rank below lattice rank");

    Problem prob;
    prob.m = m;
    prob.ambient = ambient;
    prob.budget = budget;
    prob.order.resize(m);
    std::iota(prob.order.begin(), prob.order.end(), std::size_t{0});
    std::vector<long> degree(m, 0), weight(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        weight[i] = l.gram.at(i, i).convert_to<long>();
        for (std::size_t j = 0; j < m; ++j)
            if (j != i && l.gram.at(i, j) != 0) ++degree[i];
    }
    std::sort(prob.order.begin(), prob.order.end(), [&](std::size_t a, std::size_t b) {
        if (weight[a] != weight[b]) return weight[a] < weight[b];  // most negative first
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });
    prob.target.assign(m, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            prob.target[i][j] = (-l.gram.at(prob.order[i], prob.order[j])).convert_to<long>();
    return prob;
}

EmbedResult assemble(const Problem& prob, const std::vector<std::vector<long>>& sol,
                     unsigned long long nodes, bool exhausted) {
    EmbedResult res;
    res.nodes = nodes;
    if (!sol.empty()) {
        res.status = EmbedStatus::EmbeddingFound;
        DiagonalEmbedding e;
        e.ambient = prob.ambient;
        e.vectors.assign(prob.m, {});
        for (std::size_t i = 0; i < prob.m; ++i) e.vectors[prob.order[i]] = sol[i];
        res.embedding = std::move(e);
    } else {
        res.status = exhausted ? EmbedStatus::BudgetExhausted : EmbedStatus::NoEmbedding;
    }
    return res;
}

}  // namespace

EmbedResult embed_into_diagonal(const Lattice& l, std::size_t ambient,
                                unsigned long long node_budget, bool parallel) {
    Problem prob = make_problem(l, ambient, node_budget);
    if (prob.m == 0) return assemble(prob, {{}}, 1, false);

#ifdef _OPENMP
    if (parallel) {
        // Enumerate complete first vectors serially, then finish each branch
        // independently; the lowest branch with a solution wins, so the
        // certificate does not depend on scheduling.
        std::vector<std::vector<long>> firsts;
        {
            std::vector<long> v(prob.ambient, 0);
            // Weakly decreasing nonnegative vectors of the right norm.
            auto rec = [&](auto&& self, std::size_t col, long rem, long cap) -> void {
                if (col == prob.ambient) {
                    if (rem == 0) firsts.push_back(v);
                    return;
                }
                for (long x = std::min(cap, isqrt_long(rem)); x >= 0; --x) {
                    v[col] = x;
                    self(self, col + 1, rem - x * x, x);
                    v[col] = 0;
                    if (x == 0) break;
                }
            };
            rec(rec, 0, prob.target[0][0], prob.target[0][0]);
        }
        std::vector<std::vector<std::vector<long>>> branch_sol(firsts.size());
        std::vector<unsigned long long> branch_nodes(firsts.size(), 0);
        std::vector<char> branch_exhausted(firsts.size(), 0);
        std::atomic<std::size_t> min_found{firsts.size()};
#pragma omp parallel for schedule(dynamic)
        for (std::size_t b = 0; b < firsts.size(); ++b) {
            if (b > min_found.load()) continue;  // cannot affect the answer
            Search s(prob);
            s.placed.push_back(firsts[b]);
            s.suffix_norm.push_back(std::vector<long>(prob.ambient + 1, 0));
            for (std::size_t j = prob.ambient; j-- > 0;)
                s.suffix_norm[0][j] = s.suffix_norm[0][j + 1] + firsts[b][j] * firsts[b][j];
            bool found = s.place_rest(1);
            branch_nodes[b] = s.nodes;
            branch_exhausted[b] = s.out_of_budget ? 1 : 0;
            if (found) {
                branch_sol[b] = s.solution;  // already includes the first row
                std::size_t cur = min_found.load();
                while (b < cur && !min_found.compare_exchange_weak(cur, b)) {
                }
            }
        }
        unsigned long long nodes = firsts.size();
        bool exhausted = false;
        for (std::size_t b = 0; b < firsts.size(); ++b) {
            nodes += branch_nodes[b];
            if (branch_exhausted[b]) exhausted = true;
        }
        for (std::size_t b = 0; b < firsts.size(); ++b)
            if (!branch_sol[b].empty()) return assemble(prob, branch_sol[b], nodes, false);
        return assemble(prob, {}, nodes, exhausted);
    }
#else
    (void)parallel;
#endif
    Search s(prob);
    bool found = s.place_rest(0);
    return assemble(prob, found ? s.solution : std::vector<std::vector<long>>{}, s.nodes,
                    s.out_of_budget);
}

bool verify_embedding(const Lattice& l, const DiagonalEmbedding& e) {
    const std::size_t m = l.gram.rows();
    if (e.vectors.size() != m) return false;
    for (const auto& v : e.vectors)
        if (v.size() != e.ambient) return false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Int acc(0);
            for (std::size_t k = 0; k < e.ambient; ++k)
                acc -= Int(e.vectors[i][k]) * Int(e.vectors[j][k]);
            if (acc != l.gram.at(i, j)) return false;
        }
    return true;
}

ObstructionResult donaldson_obstruction(long p, long n, std::size_t margin,
                                        unsigned long long node_budget, bool parallel) {
    Lattice l = intersection_matrix(build_w(p, n));
    ObstructionResult out;
    out.rank = l.gram.rows();
    out.ambient = out.rank + margin;
    EmbedResult r = embed_into_diagonal(l, out.ambient, node_budget, parallel);
    out.status = r.status;
    out.embedding = r.embedding;
    out.nodes = r.nodes;
    return out;
}

std::string embedding_to_json(const EmbedResult& r) {
    ordered_json j;
    j["status"] = to_string(r.status);
    if (r.embedding) {
        j["ambient"] = r.embedding->ambient;
        j["vectors"] = ordered_json::array();
        for (const auto& v : r.embedding->vectors) j["vectors"].push_back(v);
    }
    return j.dump();
}

}  // namespace dehn
