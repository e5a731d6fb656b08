#include "dehn/rational.hpp"

#include <sstream>

namespace dehn {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(Int(s));
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::domain_error("parse_rational: zero denominator");
    return Rational(n, d);
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << '/' << den(r);
    return os.str();
}

std::string to_string(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

}  // namespace dehn
