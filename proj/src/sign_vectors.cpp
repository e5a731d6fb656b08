#include "dehn/sign_vectors.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dehn {

const char* filter_name(OvertwistFilter f) {
    switch (f) {
        case OvertwistFilter::Potatos: return "potatos";
        case OvertwistFilter::Box: return "box";
        case OvertwistFilter::Stop: return "stop";
        case OvertwistFilter::Page28: return "page28";
    }
    return "?";
}

std::optional<OvertwistFilter> is_overtwisted_vector(const SignVector& q, long p, long n) {
    if (p < 2 || n < 1) throw std::invalid_argument("filters need p >= 2, n >= 1");
    if (q.q1 < 0 || q.q1 > 1 || q.q2 < 0 || q.q2 > p || q.q3 < 0 || q.q3 > p * (n + 1))
        throw std::invalid_argument("sign vector out of range");

    if (q.q2 <= q.q3 && q.q3 <= q.q2 + p * n) return OvertwistFilter::Potatos;
    if ((q.q1 == 0 && q.q3 <= p - 1) || (q.q1 == 1 && q.q3 >= p * n + 1))
        return OvertwistFilter::Box;
    if ((q.q1 == 0 && q.q2 == 0) || (q.q1 == 1 && q.q2 == p)) return OvertwistFilter::Stop;
    const SignVector bad[4] = {{0, 1, p * n + 2},
                               {0, p - 1, p * n + p},
                               {1, 1, 0},
                               {1, p - 1, p - 2}};
    for (const auto& b : bad)
        if (q == b) return OvertwistFilter::Page28;
    return std::nullopt;
}

std::vector<SignVector> enumerate_candidates_serial(long p, long n) {
    std::vector<SignVector> out;
    for (long q1 = 0; q1 <= 1; ++q1)
        for (long q2 = 0; q2 <= p; ++q2)
            for (long q3 = 0; q3 <= p * (n + 1); ++q3)
                if (!is_overtwisted_vector({q1, q2, q3}, p, n)) out.push_back({q1, q2, q3});
    return out;
}

std::vector<SignVector> enumerate_candidates(long p, long n) {
    const long q3_max = p * (n + 1);
#ifdef _OPENMP
    const int chunks = std::max(1, std::min<int>(omp_get_max_threads(),
                                                 static_cast<int>(q3_max + 1)));
    std::vector<std::vector<SignVector>> parts(chunks);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        long lo = q3_max * c / chunks + (c ? 1 : 0);
        long hi = q3_max * (c + 1) / chunks;
        auto& part = parts[c];
        for (long q1 = 0; q1 <= 1; ++q1)
            for (long q2 = 0; q2 <= p; ++q2)
                for (long q3 = lo; q3 <= hi; ++q3)
                    if (!is_overtwisted_vector({q1, q2, q3}, p, n)) part.push_back({q1, q2, q3});
    }
    std::vector<SignVector> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
#else
    return enumerate_candidates_serial(p, n);
#endif
}

Int upper_bound(long p, long n) {
    if (p < 2 || n < 1) throw std::invalid_argument("upper_bound needs p >= 2, n >= 1");
    Int v = Int(p) * Int(p - 1) - 4;
    if (v < 0) v = 0;
    return 2 * v;
}

}  // namespace dehn
