#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

// All derived quantities (multiplicities, dimensions, cyclotomic
// coefficients, Smith normal forms) are computed in arbitrary precision;
// lattice coordinates themselves stay machine-sized.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Coord = long long;
using Vec = std::vector<Coord>;
using VecI = std::vector<Int>;
using VecQ = std::vector<Rat>;

// Thrown when a desk-scale cost guard refuses a computation.  The CLI maps
// this to exit code 3.
struct CostGuardError : std::runtime_error {
    explicit CostGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Usage/consistency errors (bad input data, contract violations).  The CLI
// maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec vec_scale(Coord c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (Coord x : a)
        if (x != 0) return false;
    return true;
}

inline Coord dot(const Vec& a, const Vec& b) {
    Coord s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot_q(const Vec& a, const VecQ& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

// Canonical rational formatting: reduced, positive denominator, "p" when
// integral, otherwise "p/q".
std::string format_rat(const Rat& r);
Rat parse_rat(const std::string& s);

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace satake
