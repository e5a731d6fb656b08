#include "dehn/charvec.hpp"

#include "dehn/definiteness.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

namespace {

using RationalVec = std::vector<Rational>;

// Solves G y = rhs exactly over the rationals; G must be nonsingular.
RationalVec solve(const IntMatrix& g, const RationalVec& rhs) {
    const std::size_t n = g.rows();
    std::vector<Rational> a(n * (n + 1));
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * (n + 1) + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) at(i, j) = Rational(g.at(i, j));
        at(i, n) = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && at(piv, k) == 0) ++piv;
        if (piv == n) throw std::domain_error("solve: singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j <= n; ++j) std::swap(at(k, j), at(piv, j));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || at(i, k) == 0) continue;
            Rational f = at(i, k) / at(k, k);
            for (std::size_t j = k; j <= n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    RationalVec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = at(i, n) / at(i, i);
    return y;
}

Rational dot(const RationalVec& a, const RationalVec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Largest integer <= sqrt(r) for rational r >= 0.
Int rational_sqrt_floor(const Rational& r) {
    Int p = num(r), q = den(r);
    return isqrt_floor(p * q) / q;  // floor(sqrt(p/q)) via floor(sqrt(pq))/q, then check
}

// Integer range { x : (x - c)^2 <= bound } computed exactly.
void square_range(const Rational& c, const Rational& bound, Int& lo, Int& hi) {
    if (bound < 0) {
        lo = 1;
        hi = 0;
        return;
    }
    Int root = rational_sqrt_floor(bound);
    lo = ceil_of(c - Rational(root) - 1);
    hi = floor_of(c + Rational(root) + 1);
    while (lo <= hi && (Rational(lo) - c) * (Rational(lo) - c) > bound) ++lo;
    while (lo <= hi && (Rational(hi) - c) * (Rational(hi) - c) > bound) --hi;
}

struct Ldl {
    std::vector<Rational> diag;   // positive pivots
    std::vector<RationalVec> l;   // unit lower triangular, row-major
};

// Q = L D L^T for positive-definite Q.
Ldl ldl_decompose(const std::vector<RationalVec>& q) {
    const std::size_t n = q.size();
    Ldl out;
    out.diag.assign(n, Rational(0));
    out.l.assign(n, RationalVec(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Rational d = q[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= out.l[j][k] * out.l[j][k] * out.diag[k];
        if (d <= 0) throw std::domain_error("ldl: form is not positive definite");
        out.diag[j] = d;
        out.l[j][j] = 1;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational v = q[i][j];
            for (std::size_t k = 0; k < j; ++k) v -= out.l[i][k] * out.l[j][k] * out.diag[k];
            out.l[i][j] = v / d;
        }
    }
    return out;
}

}  // namespace

CharClassResult correction_term_class_max(const IntMatrix& g, const std::vector<Int>& k0) {
    if (!g.is_square() || !g.is_symmetric())
        throw std::invalid_argument("correction_term_class_max: symmetric matrix required");
    const std::size_t n = g.rows();
    if (k0.size() != n) throw std::invalid_argument("covector size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (mod(k0[i] - g.at(i, i), Int(2)) != 0)
            throw std::invalid_argument("covector is not characteristic");
    if (definiteness(g) != Definiteness::NegativeDefinite)
        throw std::invalid_argument("correction_term_class_max: negative-definite form required");

    // Maximize (K0+2Gx)^T G^-1 (K0+2Gx) = const + 4 K0.x + 4 x^T G x over Z^n,
    // i.e. minimize h(x) = (x-x*)^T Q (x-x*) with Q = -4G, x* = -G^-1 K0 / 2.
    RationalVec k0r(n);
    for (std::size_t i = 0; i < n; ++i) k0r[i] = Rational(k0[i]);
    RationalVec ginv_k0 = solve(g, k0r);
    RationalVec center(n);
    for (std::size_t i = 0; i < n; ++i) center[i] = -ginv_k0[i] / 2;

    std::vector<RationalVec> q(n, RationalVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(-4 * g.at(i, j));
    Ldl ldl = ldl_decompose(q);

    // h(x) = sum_i d_i y_i^2 with y_i = (x_i - c_i) + sum_{j>i} L_ji (x_j - c_j):
    // assign coordinates from the last one down.
    std::vector<Int> x(n), best_x(n);
    Rational best_h(-1);

    // Initial bound from coordinatewise rounding of the center.
    {
        std::vector<Int> x0(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int f = floor_of(center[i]);
            x0[i] = (center[i] - Rational(f) <= Rational(1, 2)) ? f : f + 1;
        }
        Rational h(0);
        for (std::size_t ii = n; ii-- > 0;) {
            Rational y = Rational(x0[ii]) - center[ii];
            for (std::size_t j = ii + 1; j < n; ++j)
                y += ldl.l[j][ii] * (Rational(x0[j]) - center[j]);
            h += ldl.diag[ii] * y * y;
        }
        best_h = h;
        best_x = x0;
    }

    // Depth-first over levels i = n-1 .. 0 with exact pruning.
    auto dfs = [&](auto&& self, std::size_t level, const Rational& partial) -> void {
        if (partial > best_h) return;
        std::size_t i = level - 1;
        // y_i = x_i - c_i + sum_{j>i} L_ji (x_j - c_j)
        Rational shift(0);
        for (std::size_t j = i + 1; j < n; ++j)
            shift += ldl.l[j][i] * (Rational(x[j]) - center[j]);
        Rational ci = center[i] - shift;
        Int lo, hi;
        square_range(ci, (best_h - partial) / ldl.diag[i], lo, hi);
        for (Int v = lo; v <= hi; ++v) {
            Rational y = Rational(v) - ci;
            Rational add = ldl.diag[i] * y * y;
            if (partial + add > best_h) continue;
            x[i] = v;
            if (i == 0) {
                Rational h = partial + add;
                if (h < best_h) {
                    best_h = h;
                    best_x = x;
                }
            } else {
                self(self, i, partial + add);
            }
        }
    };
    if (n > 0) dfs(dfs, n, Rational(0));

    CharClassResult res;
    res.maximizer.resize(n);
    RationalVec kr(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int gi(0);
        for (std::size_t j = 0; j < n; ++j) gi += 2 * g.at(i, j) * best_x[j];
        res.maximizer[i] = k0[i] + gi;
        kr[i] = Rational(res.maximizer[i]);
    }
    Rational ksq = dot(kr, solve(g, kr));
    res.d = (ksq + Rational(Int(n))) / 4;
    return res;
}

std::vector<std::vector<std::uint8_t>> characteristic_sublinks(const IntMatrix& g) {
    if (!g.is_square() || !g.is_symmetric())
        throw std::invalid_argument("characteristic_sublinks: symmetric matrix required");
    const std::size_t n = g.rows();
    // Augmented GF(2) system G x = diag(G).
    std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<std::uint8_t>(mod(g.at(i, j), Int(2)).convert_to<unsigned>());
        a[i][n] = static_cast<std::uint8_t>(mod(g.at(i, i), Int(2)).convert_to<unsigned>());
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && !a[piv][col]) ++piv;
        if (piv == n) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != row && a[i][col])
                for (std::size_t j = col; j <= n; ++j) a[i][j] ^= a[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][n]) throw std::domain_error("characteristic_sublinks: inconsistent system");

    std::vector<std::size_t> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    if (free_cols.size() > 16)
        throw std::domain_error("characteristic_sublinks: too many solutions to enumerate");

    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << free_cols.size()); ++mask) {
        std::vector<std::uint8_t> x(n, 0);
        for (std::size_t t = 0; t < free_cols.size(); ++t) x[free_cols[t]] = (mask >> t) & 1;
        for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2) {
            std::uint8_t v = a[r2][n];
            for (auto c : free_cols) v ^= static_cast<std::uint8_t>(a[r2][c] & x[c]);
            x[pivot_col[r2]] = v;
        }
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> spin_covector(const IntMatrix& g) {
    auto subs = characteristic_sublinks(g);
    const auto& chi = subs.front();
    const std::size_t n = g.rows();
    std::vector<Int> k(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (chi[j]) k[i] += g.at(i, j);
    return k;
}

std::vector<Int> label_covector(const IntMatrix& g, const Int& c) {
    std::vector<Int> k = spin_covector(g);
    if (!k.empty()) k[0] += 2 * c;
    return k;
}

Rational correction_term_label(const IntMatrix& g, const Int& c) {
    return correction_term_class_max(g, label_covector(g, c)).d;
}

}  // namespace dehn
