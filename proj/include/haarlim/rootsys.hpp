// Root-system data for split type A_{n-1} and finite products thereof:
// positive roots with multiplicities, the density exponent beta, Weyl orbits,
// chamber membership, dominance order, and the compact-subgroup constants
// that feed the lattice remainder exponents.
#pragma once

#include <algorithm>
#include <optional>
#include <set>

#include "haarlim/linalg.hpp"
#include "haarlim/weights.hpp"

namespace haarlim {

struct RootSystem {
    // Block sizes: factor k is the root system A_{factors[k]-1}, realized on
    // sum-zero vectors of length factors[k].
    std::vector<int> factors;
    std::vector<int> blockStart;  // offsets of each block, plus total length at the end

    std::vector<std::pair<Weight, int>> positiveRoots;  // root, multiplicity
    std::vector<Weight> simpleRoots;
    std::vector<ChamberVector> chamberRays;  // extreme-ray generators of the closed chamber
    Weight beta;                             // multiplicity-weighted sum of positive roots
    Weight halfSumOrthogonal;                // half-sum of a maximal strongly orthogonal system
    int dimG = 0;
    int rankK = 0;         // rank of the maximal compact subgroup
    int numPosRootsK = 0;  // number of positive roots of the maximal compact subgroup
    std::optional<long> tau1Table;  // tabulated smoothing exponent, where available

    int rank() const {
        int r = 0;
        for (int n : factors) r += n - 1;
        return r;
    }
    int ambient() const { return blockStart.back(); }
    bool single_factor() const { return factors.size() == 1; }

    bool operator==(const RootSystem& o) const { return factors == o.factors; }

    /// Normalize a raw coordinate vector to the canonical sum-zero-per-block form.
    RatVec normalized(RatVec v) const {
        if (static_cast<int>(v.size()) != ambient())
            throw std::invalid_argument("coordinate vector has wrong length");
        for (std::size_t b = 0; b + 1 < blockStart.size(); ++b) {
            int lo = blockStart[b], hi = blockStart[b + 1];
            Rat mean = 0;
            for (int i = lo; i < hi; ++i) mean += v[i];
            mean /= (hi - lo);
            for (int i = lo; i < hi; ++i) v[i] -= mean;
        }
        return v;
    }

    Weight weight(RatVec v) const { return Weight{normalized(std::move(v))}; }
    ChamberVector chamber_vector(RatVec v) const { return ChamberVector{normalized(std::move(v))}; }

    /// The coordinate functional lambda_i of a block, as a sum-zero weight.
    Weight lambda(std::size_t block, int i) const {
        int n = factors.at(block);
        if (i < 0 || i >= n) throw std::out_of_range("lambda index");
        RatVec v(ambient(), Rat(0));
        v[blockStart[block] + i] = 1;
        return weight(std::move(v));
    }
};

namespace detail {

struct CompactData {
    int rankK;
    int numPosRootsK;
    std::optional<long> tau1Table;
};

// Data for the maximal compact subgroup of SL(n,R). Small n come from an
// explicit table; larger n from the closed-form rows of the same table.
inline CompactData compact_data_type_A(int n) {
    switch (n) {
        case 2: return {1, 1, std::nullopt};
        case 3: return {1, 1, 17};
        case 4: return {2, 2, 38};
        case 6: return {3, 6, 86};
        default: break;
    }
    long bound = 3L * n * n - 1;
    if (n % 2 == 1) return {(n - 1) / 2, (n * n - 2 * n - 3) / 4, n >= 5 ? std::optional<long>(bound) : std::nullopt};
    return {n / 2, (n * n - 2 * n) / 4, n >= 8 ? std::optional<long>(bound) : std::nullopt};
}

}  // namespace detail

/// Root system of SL(n,R), i.e. type A_{n-1}, on sum-zero vectors of length n.
inline RootSystem build_type_A(int n) {
    if (n < 2) throw std::invalid_argument("build_type_A: need n >= 2");
    RootSystem rs;
    rs.factors = {n};
    rs.blockStart = {0, n};

    auto unit = [&](int i, int j) {  // e_i - e_j
        RatVec v(n, Rat(0));
        v[i] = 1;
        v[j] = -1;
        return Weight{std::move(v)};
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rs.positiveRoots.push_back({unit(i, j), 1});
    for (int i = 0; i + 1 < n; ++i) rs.simpleRoots.push_back(unit(i, i + 1));

    RatVec b(n);
    for (int k = 0; k < n; ++k) b[k] = n + 1 - 2 * (k + 1);
    rs.beta = Weight{std::move(b)};

    // Extreme rays of the closed chamber: the fundamental coweights.
    for (int k = 1; k < n; ++k) {
        RatVec v(n, Rat(0));
        for (int i = 0; i < k; ++i) v[i] = 1;
        rs.chamberRays.push_back(rs.chamber_vector(std::move(v)));
    }

    RatVec l(n, Rat(0));
    for (int i = 0; i < n / 2; ++i) l[i] = Rat(1, 2);
    for (int i = (n + 1) / 2; i < n; ++i) l[i] = Rat(-1, 2);
    rs.halfSumOrthogonal = Weight{std::move(l)};

    rs.dimG = n * n - 1;
    auto cd = detail::compact_data_type_A(n);
    rs.rankK = cd.rankK;
    rs.numPosRootsK = cd.numPosRootsK;
    rs.tau1Table = cd.tau1Table;
    return rs;
}

/// Direct product: block-concatenated data. Beta, the half-sum and the rays
/// concatenate; dimensions and compact-subgroup counts add.
inline RootSystem build_product(const RootSystem& a, const RootSystem& b) {
    if (a.factors.empty() || b.factors.empty()) throw std::invalid_argument("build_product: empty factor");
    RootSystem rs;
    rs.factors = a.factors;
    rs.factors.insert(rs.factors.end(), b.factors.begin(), b.factors.end());
    rs.blockStart = {0};
    for (int n : rs.factors) rs.blockStart.push_back(rs.blockStart.back() + n);

    const int na = a.ambient(), nb = b.ambient();
    auto embed = [&](const RatVec& v, bool first) {
        RatVec r(na + nb, Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i) r[(first ? 0 : na) + i] = v[i];
        return r;
    };
    for (const auto& [w, m] : a.positiveRoots) rs.positiveRoots.push_back({Weight{embed(w.coords, true)}, m});
    for (const auto& [w, m] : b.positiveRoots) rs.positiveRoots.push_back({Weight{embed(w.coords, false)}, m});
    for (const auto& w : a.simpleRoots) rs.simpleRoots.push_back(Weight{embed(w.coords, true)});
    for (const auto& w : b.simpleRoots) rs.simpleRoots.push_back(Weight{embed(w.coords, false)});
    for (const auto& v : a.chamberRays) rs.chamberRays.push_back(ChamberVector{embed(v.coords, true)});
    for (const auto& v : b.chamberRays) rs.chamberRays.push_back(ChamberVector{embed(v.coords, false)});
    rs.beta = Weight{embed(a.beta.coords, true)} + Weight{embed(b.beta.coords, false)};
    rs.halfSumOrthogonal =
        Weight{embed(a.halfSumOrthogonal.coords, true)} + Weight{embed(b.halfSumOrthogonal.coords, false)};
    rs.dimG = a.dimG + b.dimG;
    rs.rankK = a.rankK + b.rankK;
    rs.numPosRootsK = a.numPosRootsK + b.numPosRootsK;
    rs.tau1Table = std::nullopt;
    return rs;
}

/// Full Weyl orbit: all blockwise coordinate permutations, deduplicated.
inline std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.coords.size()) != rs.ambient())
        throw std::invalid_argument("weyl_orbit: dimension mismatch");
    std::vector<std::vector<RatVec>> blockPerms;
    for (std::size_t b = 0; b + 1 < rs.blockStart.size(); ++b) {
        RatVec blk(w.coords.begin() + rs.blockStart[b], w.coords.begin() + rs.blockStart[b + 1]);
        std::sort(blk.begin(), blk.end());
        std::vector<RatVec> perms;
        do {
            perms.push_back(blk);
        } while (std::next_permutation(blk.begin(), blk.end()));
        blockPerms.push_back(std::move(perms));
    }
    std::set<Weight> orbit;
    std::vector<std::size_t> idx(blockPerms.size(), 0);
    while (true) {
        RatVec v;
        v.reserve(rs.ambient());
        for (std::size_t b = 0; b < blockPerms.size(); ++b)
            v.insert(v.end(), blockPerms[b][idx[b]].begin(), blockPerms[b][idx[b]].end());
        orbit.insert(Weight{std::move(v)});
        std::size_t b = 0;
        while (b < idx.size() && ++idx[b] == blockPerms[b].size()) idx[b++] = 0;
        if (b == idx.size()) break;
    }
    return orbit;
}

/// Exact membership in the closed positive chamber.
inline bool in_positive_chamber(const RootSystem& rs, const ChamberVector& a) {
    for (const auto& alpha : rs.simpleRoots)
        if (pairing(alpha, a) < 0) return false;
    return true;
}

/// g1 <= g2 as functionals restricted to the closed positive chamber:
/// g2 - g1 must be nonnegative on every extreme ray.
inline bool dominance_leq(const RootSystem& rs, const Weight& g1, const Weight& g2) {
    Weight diff = g2 - g1;
    for (const auto& ray : rs.chamberRays)
        if (pairing(diff, ray) < 0) return false;
    return true;
}

/// Least integer m with 4m > rankK + 2 * numPosRootsK. Only defined for a
/// single factor of rank at least two.
inline int m_minimal(const RootSystem& rs) {
    if (!rs.single_factor() || rs.rank() < 2)
        throw std::invalid_argument("m_minimal: requires a single factor of rank >= 2");
    int bound = rs.rankK + 2 * rs.numPosRootsK;
    return bound / 4 + 1;
}

/// Smoothing exponent 4m + 2 dim(G) with minimal m. The tabulated literal,
/// where one exists, is carried separately in RootSystem::tau1Table.
inline long tau1(const RootSystem& rs) { return 4L * m_minimal(rs) + 2L * rs.dimG; }

}  // namespace haarlim
