#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace latlab {

// All lattice arithmetic in this library is exact. Glue-vector clearing and
// minor expansion can exceed 64 bits even at rank <= 26, so the scalar types
// are arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return den(r) == 1; }

// Floor division for Int (C++ '/' truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// Canonical representative of r modulo m, in [0, m).
inline Rat mod_canonical(const Rat& r, const Rat& m) {
    Rat q = r / m;
    Int fl = floor_div(num(q), den(q));
    return r - m * fl;
}

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}

}  // namespace latlab
