// Exact rational scalars and small dense vectors used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace haarlim {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec vadd(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vadd: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec vsub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vsub: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec vneg(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RatVec vscale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

/// Scale a rational vector by the unique positive rational making it a
/// primitive integer vector (content 1). Returns the scale factor applied.
/// The zero vector is left untouched with factor 1.
inline Rat make_primitive(RatVec& v) {
    Int lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    Int gcd = 0;
    for (const auto& x : v) gcd = boost::multiprecision::gcd(gcd, numerator(x) * (lcm / denominator(x)));
    if (gcd == 0) return Rat(1);
    Rat f(lcm, gcd);
    for (auto& x : v) x *= f;
    return f;
}

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline std::int64_t to_int64(const Int& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational component exceeds 64 bits");
    return x.convert_to<std::int64_t>();
}

inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

/// Lexicographic order on rational vectors; the canonical tie-breaker used
/// for all deterministic sorting in the library.
inline bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

}  // namespace haarlim
