#include "dehn/spin_analysis.hpp"

#include "dehn/charvec.hpp"
#include "dehn/definiteness.hpp"
#include "dehn/families.hpp"
#include "dehn/kirby.hpp"

#include <stdexcept>

namespace dehn {

void TrackedPresentation::blow_down(std::size_t e) {
    const std::size_t n = m.rows();
    Int eps = m.at(e, e);
    if (eps != 1 && eps != -1) throw std::invalid_argument("blow_down: framing must be +-1");

    for (auto& x : sublinks) {
        unsigned acc = x[e];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == e) continue;
            acc ^= static_cast<unsigned>(mod(m.at(e, i), Int(2)).convert_to<unsigned>() & x[i]);
        }
        if ((acc & 1u) != 1u)
            throw std::logic_error("blow_down: tracked sublink is not characteristic");
    }

    IntMatrix next(n - 1, n - 1);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != e) keep.push_back(i);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            next.at(a, b) = m.at(keep[a], keep[b]) - eps * m.at(keep[a], e) * m.at(keep[b], e);
    m = next;
    for (auto& x : sublinks) {
        std::vector<std::uint8_t> nx;
        for (auto i : keep) nx.push_back(x[i]);
        x = std::move(nx);
    }
}

void TrackedPresentation::blow_up_meridian(std::size_t y, int eps) {
    const std::size_t n = m.rows();
    IntMatrix next(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) next.at(i, j) = m.at(i, j);
    next.at(y, y) += eps;
    next.at(y, n) = next.at(n, y) = 1;
    next.at(n, n) = eps;
    m = next;
    for (auto& x : sublinks) x.push_back(static_cast<std::uint8_t>(1u ^ x[y]));
}

namespace {

constexpr std::size_t kA1 = 0, kA2 = 1, kB = 2, kC = 3, kD = 4, kK = 5;

LensSpace lens_from_surgery(const Rational& r) {
    Int nr = num(r), dr = den(r);
    if (nr < 0) {
        // S^3_{-P/Q} = L(P, Q)
        Int P = -nr;
        if (P <= dr) throw std::domain_error("lens_from_surgery: |r| must exceed 1");
        return LensSpace{P, dr, 1};
    }
    if (nr <= dr) throw std::domain_error("lens_from_surgery: |r| must exceed 1");
    return LensSpace{nr, dr, -1};
}

struct Block {
    std::vector<std::size_t> comps;  // indices into the reduced presentation
    Rational slam_value;             // surgery coefficient of the collapsed chain
    LensSpace lens;
};

// Reduced presentation of -L plus the two tracked spin structures, the one
// containing K listed second.
TrackedPresentation reduced_minus_l(long p, long n) {
    FramedLink link = minus_l_family_link(p, n);
    HomologyPresentation pres = presentation(link);

    TrackedPresentation t;
    t.m = pres.relations;
    t.sublinks = characteristic_sublinks(t.m);
    if (t.sublinks.size() != 2)
        throw std::logic_error("reduced_minus_l: expected exactly two spin structures");
    if (t.sublinks[0][kK] == t.sublinks[1][kK])
        throw std::logic_error("reduced_minus_l: K-membership must distinguish the spins");
    if (t.sublinks[0][kK] == 1) std::swap(t.sublinks[0], t.sublinks[1]);

    // Kill the hub pair: d is (-1)-framed, and after its blowdown K becomes
    // (+1)-framed and everything re-links through it; blowing K down too
    // restores the three disjoint pieces.
    t.blow_down(kD);
    t.blow_down(kK > kD ? kK - 1 : kK);
    if (t.m.rows() != 4) throw std::logic_error("reduced_minus_l: unexpected component count");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            bool in_chain = (i == kA1 && j == kA2);
            if ((t.m.at(i, j) != 0) != in_chain)
                throw std::logic_error("reduced_minus_l: presentation did not split into blocks");
        }
    return t;
}

std::vector<Block> split_blocks(const TrackedPresentation& t) {
    std::vector<Block> blocks(3);
    blocks[0].comps = {kA1, kA2};
    blocks[1].comps = {kB};
    blocks[2].comps = {kC};
    // Slam-dunk the second chain component into the first.
    blocks[0].slam_value =
        Rational(t.m.at(kA1, kA1)) - Rational(1) / Rational(t.m.at(kA2, kA2));
    blocks[1].slam_value = Rational(t.m.at(kB, kB));
    blocks[2].slam_value = Rational(t.m.at(kC, kC));
    for (auto& b : blocks) b.lens = lens_from_surgery(b.slam_value);
    return blocks;
}

// Correction term of the spin structure with sublink chi on the block,
// computed on a negative-definite model reached by tracked moves.
Rational block_spin_degree(const IntMatrix& block, const std::vector<std::uint8_t>& chi) {
    TrackedPresentation t;
    t.m = block;
    t.sublinks = {chi};
    int sign = 1;
    if (definiteness(t.m) != Definiteness::NegativeDefinite) {
        // Mirror first: same sublink presents the same spin structure on the
        // reversed orientation, and degrees negate.
        sign = -1;
        for (std::size_t i = 0; i < t.m.rows(); ++i)
            for (std::size_t j = 0; j < t.m.cols(); ++j) t.m.at(i, j) = -t.m.at(i, j);
    }
    if (definiteness(t.m) != Definiteness::NegativeDefinite) {
        // Two-component mirror block with one positive weight: walk that
        // weight down to +1 with (-1)-framed meridians, then blow it down.
        std::size_t pos = t.m.rows();
        for (std::size_t i = 0; i < t.m.rows(); ++i)
            if (t.m.at(i, i) > 0) pos = i;
        if (pos == t.m.rows()) throw std::logic_error("block_spin_degree: unexpected block shape");
        while (t.m.at(pos, pos) > 1) t.blow_up_meridian(pos, -1);
        t.blow_down(pos);
        if (definiteness(t.m) != Definiteness::NegativeDefinite)
            throw std::logic_error("block_spin_degree: reduction did not reach a definite form");
    }
    const std::size_t s = t.m.rows();
    std::vector<Int> k0(s, Int(0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (t.sublinks[0][j]) k0[i] += t.m.at(i, j);
    Rational d = correction_term_class_max(t.m, k0).d;
    return sign == 1 ? d : -d;
}

}  // namespace

MinusLSpinAnalysis analyze_minus_l(long p, long n) {
    TrackedPresentation t = reduced_minus_l(p, n);
    std::vector<Block> blocks = split_blocks(t);

    MinusLSpinAnalysis out;
    for (const auto& b : blocks) out.summands.push_back(b.lens);

    Rational deg[2];
    for (int s = 0; s < 2; ++s) {
        Rational total(0);
        for (const auto& b : blocks) {
            IntMatrix sub(b.comps.size(), b.comps.size());
            std::vector<std::uint8_t> chi;
            for (std::size_t a = 0; a < b.comps.size(); ++a) {
                chi.push_back(t.sublinks[s][b.comps[a]]);
                for (std::size_t c = 0; c < b.comps.size(); ++c)
                    sub.at(a, c) = t.m.at(b.comps[a], b.comps[c]);
            }
            total += block_spin_degree(sub, chi);
        }
        deg[s] = total;
    }
    out.d_tau_V = deg[0];
    out.d_tau_W = deg[1];
    return out;
}

std::vector<LensSpace> derive_lens_summands(long p, long n) {
    TrackedPresentation t = reduced_minus_l(p, n);
    std::vector<LensSpace> out;
    for (const auto& b : split_blocks(t)) out.push_back(b.lens);
    return out;
}

}  // namespace dehn
