#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dehn {

// All arithmetic in this library is exact. Int and Rational are the only
// numeric types kernels are allowed to use; floating point is banned.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Nonnegative residue, also for negative a.
inline Int mod(const Int& a, const Int& m) {
    if (m <= 0) throw std::domain_error("mod: modulus must be positive");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_of(const Rational& r) { return floor_div(num(r), den(r)); }
inline Int ceil_of(const Rational& r) { return ceil_div(num(r), den(r)); }

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

// "a/b" or "a"; exact, no whitespace tolerance beyond surrounding trim.
Rational parse_rational(const std::string& s);

// Renders "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

}  // namespace dehn
