#ifndef ADEND_RATIONAL_HPP
#define ADEND_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace adend {

// Exact rational scalar. cpp_rational keeps values reduced with a positive
// denominator, which is exactly the canonical form we serialize.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p", "p/q" with decimal integers.  Anything else is an error.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty())
        throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw Error("zero denominator in rational literal '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw Error("malformed rational literal '" + s + "'");
    }
}

} // namespace adend

#endif
