#pragma once

#include "dehn/plumbing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dehn {

// An isometric embedding of a negative-definite lattice into (Z^N, -I),
// one integer vector per lattice basis element in the original basis order.
struct DiagonalEmbedding {
    std::size_t ambient = 0;
    std::vector<std::vector<long>> vectors;
};

enum class EmbedStatus { EmbeddingFound, NoEmbedding, BudgetExhausted };

const char* to_string(EmbedStatus s);

struct EmbedResult {
    EmbedStatus status = EmbedStatus::NoEmbedding;
    std::optional<DiagonalEmbedding> embedding;
    unsigned long long nodes = 0;  // search nodes visited (diagnostic)
};

// Exhaustive backtracking search. Basis vectors are assigned in decreasing
// |weight|, then decreasing degree; coordinate permutations and sign flips of
// the ambient lattice are quotiented out by canonical ordering, so the
// search is finite and the outcome (including the certificate) is identical
// regardless of thread count. A node budget of 0 means unlimited; exhausting
// a budget is reported as its own status, distinct from certified
// nonexistence. Rejects lattices that are not negative definite and ambient
// ranks below the lattice rank.
EmbedResult embed_into_diagonal(const Lattice& l, std::size_t ambient,
                                unsigned long long node_budget = 0, bool parallel = true);

// Exact re-check of the certificate against the Gram matrix.
bool verify_embedding(const Lattice& l, const DiagonalEmbedding& e);

struct ObstructionResult {
    EmbedStatus status = EmbedStatus::NoEmbedding;
    std::size_t rank = 0;
    std::size_t ambient = 0;
    std::optional<DiagonalEmbedding> embedding;
    unsigned long long nodes = 0;
};

// Runs the embedding search on the intersection form of build_w(p, n) with
// ambient rank + margin. No embedding certifies that the boundary bounds no
// negative-definite piece gluing up to a diagonalizable closed form.
ObstructionResult donaldson_obstruction(long p, long n, std::size_t margin = 0,
                                        unsigned long long node_budget = 0,
                                        bool parallel = true);

std::string embedding_to_json(const EmbedResult& r);

}  // namespace dehn
