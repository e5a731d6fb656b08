#pragma once

#include "dehn/rational.hpp"

#include <optional>
#include <vector>

namespace dehn {

// Counts of positive basic slices in the three fiber neighbourhoods; the
// ranges are q1 <= 1, q2 <= p, q3 <= p(n+1).
struct SignVector {
    long q1, q2, q3;

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.q1 == b.q1 && a.q2 == b.q2 && a.q3 == b.q3;
    }
    friend bool operator<(const SignVector& a, const SignVector& b) {
        if (a.q1 != b.q1) return a.q1 < b.q1;
        if (a.q2 != b.q2) return a.q2 < b.q2;
        return a.q3 < b.q3;
    }
};

// The four overtwistedness filters, applied in this fixed order purely for
// deterministic reporting; they are pure predicates, so survivors do not
// depend on the order.
enum class OvertwistFilter { Potatos, Box, Stop, Page28 };

const char* filter_name(OvertwistFilter f);

// First filter that kills the vector, or nullopt for a survivor. Vectors out
// of range for (p, n) are rejected.
std::optional<OvertwistFilter> is_overtwisted_vector(const SignVector& q, long p, long n);

// All surviving vectors in lexicographic order. The parallel kernel
// partitions the q3 range and merges deterministically; the serial walk is
// the reference it is tested against.
std::vector<SignVector> enumerate_candidates(long p, long n);
std::vector<SignVector> enumerate_candidates_serial(long p, long n);

// Each survivor contributes this many tight structures on the complement of
// the fiber neighbourhoods (a classification fact imported as a constant).
inline constexpr long kComplementTightStructures = 2;

// 2 * max{p(p-1) - 4, 0}.
Int upper_bound(long p, long n);

}  // namespace dehn
