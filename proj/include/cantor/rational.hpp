#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

// n^{-k} as an exact rational, k >= 0.
inline Rat inv_pow(int base, int k) { return Rat(Int(1), pow_int(base, static_cast<unsigned>(k))); }

inline Rat pow_rat(const Rat& base, int exp) {
    if (exp >= 0) return Rat(pow_int(num(base), unsigned(exp)), pow_int(den(base), unsigned(exp)));
    if (base == 0) fail(errc::invalid_argument, "zero to negative power");
    return Rat(pow_int(den(base), unsigned(-exp)), pow_int(num(base), unsigned(-exp)));
}

inline Int floor_rat(const Rat& r) {
    Int q = num(r) / den(r);
    if (r < 0 && q * den(r) != num(r)) --q;
    return q;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& i) { return i.convert_to<double>(); }

// "p/q" with the "/q" dropped for integers; used everywhere exact values are emitted.
inline std::string rat_str(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Accepts "p", "p/q", optional leading '-'.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) fail(errc::invalid_argument, "zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        fail(errc::invalid_argument, "cannot parse rational: " + s);
    }
}

} // namespace cantor
