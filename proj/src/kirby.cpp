#include "dehn/kirby.hpp"

#include "dehn/neg_cf.hpp"

#include <sstream>
#include <stdexcept>

namespace dehn {

FramedLink blow_down(const FramedLink& link, std::size_t component) {
    link.validate();
    const Framing& f = link.framings.at(component);
    if (is_infinite(f) || (*f != 1 && *f != -1))
        throw std::invalid_argument("blow_down: framing must be +1 or -1");
    const Int eps = num(*f);

    FramedLink out;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < link.size(); ++i)
        if (i != component) keep.push_back(i);
    out.linking = IntMatrix(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        std::size_t i = keep[a];
        Int li = link.lk(i, component);
        if (is_infinite(link.framings[i]))
            out.framings.push_back(std::nullopt);
        else
            out.framings.push_back(Framing(*link.framings[i] - Rational(eps * li * li)));
        if (!link.labels.empty()) out.labels.push_back(link.label(i));
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            std::size_t j = keep[b];
            Int lj = link.lk(j, component);
            out.linking.at(a, b) = out.linking.at(b, a) = link.lk(i, j) - eps * li * lj;
        }
    }
    return out;
}

FramedLink rolfsen_twist(const FramedLink& link, std::size_t component, const Int& t) {
    link.validate();
    FramedLink out = link;
    const Framing& f = link.framings.at(component);
    if (is_infinite(f)) {
        out.framings[component] = (t == 0) ? Framing(std::nullopt) : Framing(Rational(1) / Rational(t));
    } else if (*f == 0) {
        // 1/r is already infinite; adding t changes nothing.
        out.framings[component] = Rational(0);
    } else {
        Rational inv = Rational(1) / *f + Rational(t);
        out.framings[component] = (inv == 0) ? Framing(std::nullopt) : Framing(Rational(1) / inv);
    }
    for (std::size_t i = 0; i < link.size(); ++i) {
        if (i == component) continue;
        Int li = link.lk(i, component);
        if (!is_infinite(out.framings[i]))
            out.framings[i] = *out.framings[i] + Rational(t * li * li);
        for (std::size_t j = i + 1; j < link.size(); ++j) {
            if (j == component) continue;
            Int lj = link.lk(j, component);
            out.set_lk(i, j, link.lk(i, j) + t * li * lj);
        }
    }
    return out;
}

FramedLink delete_component(const FramedLink& link, std::size_t component) {
    link.validate();
    if (!is_infinite(link.framings.at(component)))
        throw std::invalid_argument("delete_component: only infinity-framed components");
    FramedLink out;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < link.size(); ++i)
        if (i != component) keep.push_back(i);
    out.linking = IntMatrix(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        out.framings.push_back(link.framings[keep[a]]);
        if (!link.labels.empty()) out.labels.push_back(link.label(keep[a]));
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            Int v = link.lk(keep[a], keep[b]);
            out.linking.at(a, b) = out.linking.at(b, a) = v;
        }
    }
    return out;
}

namespace {

// Shift needed so that 1/(1/r + t) < -1; unit-numerator coefficients go to
// the infinity sentinel instead and the component gets deleted.
Int shift_into_domain(const Rational& r) {
    Rational inv = Rational(1) / r;  // want inv + t in (-1, 0)
    // For integral 1/r no such t exists; t = -1/r lands on the infinity
    // sentinel and the component gets deleted instead.
    return -ceil_of(inv);
}

}  // namespace

FramedLink integralize(const FramedLink& link) {
    link.validate();
    FramedLink cur = link;
    for (;;) {
        std::size_t idx = cur.size();
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (is_infinite(cur.framings[i]) || !is_integer(*cur.framings[i])) {
                idx = i;
                break;
            }
        if (idx == cur.size()) return cur;
        if (is_infinite(cur.framings[idx])) {
            cur = delete_component(cur, idx);
            continue;
        }
        Rational r = *cur.framings[idx];
        if (r >= -1) {
            cur = rolfsen_twist(cur, idx, shift_into_domain(r));
            if (is_infinite(cur.framings[idx])) {
                cur = delete_component(cur, idx);
                continue;
            }
            r = *cur.framings[idx];
        }
        NegCF cf = neg_continued_fraction(r);
        // The component keeps its linking and takes the head weight; the tail
        // hangs off it as a chain of new unknots.
        const std::size_t n = cur.size();
        const std::size_t extra = cf.coefficients.size() - 1;
        FramedLink next;
        next.framings = cur.framings;
        next.framings[idx] = Rational(cf.coefficients[0]);
        next.labels = cur.labels;
        next.linking = IntMatrix(n + extra, n + extra);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Int v = cur.lk(i, j);
                next.linking.at(i, j) = v;
                next.linking.at(j, i) = v;
            }
        for (std::size_t k = 0; k < extra; ++k) {
            next.framings.push_back(Rational(cf.coefficients[k + 1]));
            if (!next.labels.empty()) {
                std::ostringstream os;
                os << cur.label(idx) << "." << (k + 1);
                next.labels.push_back(os.str());
            }
            std::size_t prev = (k == 0) ? idx : n + k - 1;
            next.linking.at(prev, n + k) = 1;
            next.linking.at(n + k, prev) = 1;
        }
        cur = next;
    }
}

HomologyPresentation presentation(const FramedLink& link) {
    FramedLink integral = integralize(link);
    HomologyPresentation pres;
    const std::size_t n = integral.size();
    pres.relations = integral.linking;
    for (std::size_t i = 0; i < n; ++i) {
        pres.relations.at(i, i) = num(*integral.framings[i]);
        pres.meridian_labels.push_back(integral.label(i));
    }
    return pres;
}

Int h1_order(const HomologyPresentation& pres) {
    Int d = pres.relations.det();
    return d < 0 ? Int(-d) : d;
}

Int h1_order(const FramedLink& link) { return h1_order(presentation(link)); }

std::map<std::string, Int> generator_reduction(const HomologyPresentation& pres,
                                               const std::string& generator) {
    const std::size_t n = pres.relations.rows();
    std::size_t gi = n;
    for (std::size_t i = 0; i < n; ++i)
        if (pres.meridian_labels[i] == generator) gi = i;
    if (gi == n) throw std::invalid_argument("generator_reduction: unknown meridian label");

    // Z^n / M Z^n == U Z^n / D Z^n, so the class of e_i is column i of U read
    // against the invariant factors.
    SnfResult snf = smith_normal_form(pres.relations);
    std::size_t nontrivial = n;
    Int h = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Int& d = snf.d.at(t, t);
        if (d == 0) throw std::domain_error("not cyclic");
        if (d != 1) {
            if (nontrivial != n) throw std::domain_error("not cyclic");
            nontrivial = t;
            h = d;
        }
    }
    if (nontrivial == n) {
        // Trivial group: everything is 0 and any meridian generates.
        std::map<std::string, Int> out;
        for (std::size_t i = 0; i < n; ++i) out[pres.meridian_labels[i]] = 0;
        return out;
    }

    std::vector<Int> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = mod(snf.u.at(nontrivial, i), h);
    Int g = boost::multiprecision::gcd(cls[gi], h);
    if (g != 1) throw std::domain_error("not a generator");

    // Inverse of cls[gi] mod h by extended Euclid.
    Int a = cls[gi], m = h, x0 = 1, x1 = 0;
    Int b = m;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int x2 = x0 - q * x1;
        x0 = x1;
        x1 = x2;
    }
    Int inv = mod(x0, h);

    std::map<std::string, Int> out;
    for (std::size_t i = 0; i < n; ++i)
        out[pres.meridian_labels[i]] = mod(cls[i] * inv, h);
    return out;
}

}  // namespace dehn
