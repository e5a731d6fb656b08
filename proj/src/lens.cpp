#include "dehn/lens.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace dehn {

void LensSpace::validate() const {
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("LensSpace: orientation must be +-1");
    if (p <= 0) throw std::invalid_argument("LensSpace: order must be positive");
    if (p == 1) {
        if (q != 0) throw std::invalid_argument("LensSpace: S^3 is L(1,0)");
        return;
    }
    if (q < 1 || q >= p) throw std::invalid_argument("LensSpace: need 1 <= q < p");
    if (boost::multiprecision::gcd(p, q) != 1)
        throw std::invalid_argument("LensSpace: parameters must be coprime");
}

namespace {

using Key = std::tuple<Int, Int, Int>;

// d(L(p,q), i) on the raw index scheme, 0 <= i < p. The quadratic term uses
// the representative i itself; the recursion descends through the continued
// fraction of p/q.
Rational rec(const Int& p, const Int& q, const Int& i, std::map<Key, Rational>& memo) {
    if (p == 1) return Rational(0);
    auto key = Key{p, q, i};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int t = 2 * i + 1 - p - q;
    Rational val = Rational(p * q - t * t, 4 * p * q) - rec(q, mod(p, q), mod(i, q), memo);
    memo.emplace(key, val);
    return val;
}

// Index of the canonical spin label: the solution of 2i = p+q-1 (mod p) --
// for even p the one given by exact halving, for odd p via inverting 2.
Int spin_index(const Int& p, const Int& q) {
    Int s = p + q - 1;
    if (p % 2 == 0) return mod(s / 2, p);
    Int half = (s % 2 == 0) ? s / 2 : (s + p) / 2;
    return mod(half, p);
}

}  // namespace

Rational d_invariant_lens(const LensSpace& l, const SpinCLabel& label) {
    l.validate();
    label.validate();
    if (label.h != l.p) throw std::invalid_argument("d_invariant_lens: label order mismatch");
    if (l.p == 1) return Rational(0);
    std::map<Key, Rational> memo;
    Int i = mod(label.c + spin_index(l.p, l.q), l.p);
    Rational val = rec(l.p, l.q, i, memo);
    return l.orientation == 1 ? val : -val;
}

Rational d_connected_sum(const std::vector<std::pair<LensSpace, SpinCLabel>>& summands) {
    Rational total(0);
    for (const auto& [l, s] : summands) total += d_invariant_lens(l, s);
    return total;
}

}  // namespace dehn
