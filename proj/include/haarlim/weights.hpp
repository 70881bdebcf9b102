// Weights (functionals on the Cartan subspace) and chamber vectors (points of
// it). Both are realized as rational vectors that sum to zero within each
// simple-factor block, so that the duality pairing is the plain dot product
// and the Weyl action is a coordinate permutation.
#pragma once

#include "haarlim/rational.hpp"

namespace haarlim {

struct Weight {
    RatVec coords;

    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator!=(const Weight& o) const { return coords != o.coords; }
    bool operator<(const Weight& o) const { return lex_less(coords, o.coords); }

    Weight operator+(const Weight& o) const { return {vadd(coords, o.coords)}; }
    Weight operator-(const Weight& o) const { return {vsub(coords, o.coords)}; }
    Weight operator-() const { return {vneg(coords)}; }
    friend Weight operator*(const Rat& c, const Weight& w) { return {vscale(c, w.coords)}; }
};

struct ChamberVector {
    RatVec coords;

    bool operator==(const ChamberVector& o) const { return coords == o.coords; }
    bool operator<(const ChamberVector& o) const { return lex_less(coords, o.coords); }
};

/// Duality pairing <chi | a>. Exact, bilinear, and insensitive to adding a
/// multiple of the all-ones vector per block to either side before
/// normalization, since both sides are stored sum-zero per block.
inline Rat pairing(const Weight& w, const ChamberVector& a) { return dot(w.coords, a.coords); }

inline Rat pairing(const Weight& w, const RatVec& a) { return dot(w.coords, a); }

}  // namespace haarlim
