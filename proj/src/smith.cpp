#include "dehn/smith.hpp"

#include <cstdlib>

namespace dehn {

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> f;
    std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i) f.push_back(d.at(i, i));
    return f;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Locates the entry of smallest nonzero absolute value in a[t.., t..].
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& v = a.at(i, j);
            if (v == 0) continue;
            Int av = abs_int(v);
            if (!found || av < best) {
                best = av;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfResult res{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& a = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t k = std::min(r, c);
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot. A nonzero remainder is strictly
            // smaller than the pivot, so swapping it up makes progress.
            bool restart = false;
            for (std::size_t i = t + 1; i < r && !restart; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                if (q != 0) {
                    a.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < c && !restart; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0) {
                    a.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    restart = true;
                }
            }
            if (restart) continue;

            // Pivot must divide the remaining block for the divisibility chain.
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    for (std::size_t t = 0; t < k; ++t)
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    return res;
}

}  // namespace dehn
