// Representations as exact weight multisets over a root system, with the
// constructors needed to assemble every fixture (standard, adjoint, duals,
// direct sums, tensor and external tensor products) and the validity checks
// required before any growth analysis.
#pragma once

#include <map>
#include <memory>

#include "haarlim/polytope.hpp"
#include "haarlim/rootsys.hpp"

namespace haarlim {

struct Representation {
    std::shared_ptr<const RootSystem> rs;
    std::map<Weight, int> weights;  // weight -> multiplicity

    int dim_v() const {
        int n = 0;
        for (const auto& [w, m] : weights) n += m;
        return n;
    }

    /// Canonical indexing chi_1..chi_n: sorted weights repeated by multiplicity.
    std::vector<Weight> flattened() const {
        std::vector<Weight> out;
        for (const auto& [w, m] : weights)
            for (int i = 0; i < m; ++i) out.push_back(w);
        return out;
    }

    std::vector<RatVec> distinct_points() const {
        std::vector<RatVec> pts;
        for (const auto& [w, m] : weights) pts.push_back(w.coords);
        return pts;
    }
};

inline Representation make_rep(std::shared_ptr<const RootSystem> rs, const std::vector<Weight>& ws) {
    Representation r;
    r.rs = std::move(rs);
    for (const auto& w : ws) ++r.weights[w];
    return r;
}

/// Weights lambda_1..lambda_n of the defining representation of SL(n,R).
inline Representation standard(std::shared_ptr<const RootSystem> rs) {
    if (!rs->single_factor()) throw std::invalid_argument("standard: product root system");
    int n = rs->factors[0];
    std::vector<Weight> ws;
    for (int i = 0; i < n; ++i) ws.push_back(rs->lambda(0, i));
    return make_rep(rs, ws);
}

/// Contragredient: every weight negated, multiplicities kept.
inline Representation dual(const Representation& r) {
    Representation d;
    d.rs = r.rs;
    for (const auto& [w, m] : r.weights) d.weights[-w] = m;
    return d;
}

/// All roots with their multiplicities plus the zero weight with
/// multiplicity equal to the rank.
inline Representation adjoint(std::shared_ptr<const RootSystem> rs) {
    Representation r;
    r.rs = rs;
    for (const auto& [alpha, m] : rs->positiveRoots) {
        r.weights[alpha] += m;
        r.weights[-alpha] += m;
    }
    r.weights[Weight{RatVec(rs->ambient(), Rat(0))}] += rs->rank();
    return r;
}

/// The one-dimensional trivial representation: a single zero weight. Does not
/// span, so it fails validation on its own, but is a legal tensor factor.
inline Representation trivial(std::shared_ptr<const RootSystem> rs) {
    Representation r;
    r.rs = rs;
    r.weights[Weight{RatVec(rs->ambient(), Rat(0))}] = 1;
    return r;
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(*a.rs == *b.rs)) throw std::invalid_argument("direct_sum: mismatched root systems");
    Representation r = a;
    for (const auto& [w, m] : b.weights) r.weights[w] += m;
    return r;
}

/// Tensor product: all pairwise weight sums with multiplicities multiplying.
inline Representation tensor(const Representation& a, const Representation& b) {
    if (!(*a.rs == *b.rs)) throw std::invalid_argument("tensor: mismatched root systems");
    Representation r;
    r.rs = a.rs;
    for (const auto& [w1, m1] : a.weights)
        for (const auto& [w2, m2] : b.weights) r.weights[w1 + w2] += m1 * m2;
    return r;
}

/// External tensor product over the product group: blockwise weight pairs.
inline Representation external_tensor(const Representation& a, const Representation& b) {
    auto rs = std::make_shared<RootSystem>(build_product(*a.rs, *b.rs));
    Representation r;
    r.rs = rs;
    const int na = a.rs->ambient();
    const int nb = b.rs->ambient();
    for (const auto& [w1, m1] : a.weights)
        for (const auto& [w2, m2] : b.weights) {
            RatVec v(na + nb);
            for (int i = 0; i < na; ++i) v[i] = w1.coords[i];
            for (int i = 0; i < nb; ++i) v[na + i] = w2.coords[i];
            r.weights[Weight{std::move(v)}] += m1 * m2;
        }
    return r;
}

/// Restriction to one product factor: weights projected to that block.
inline Representation restrict_to_factor(const Representation& r, std::size_t factor) {
    const auto& rs = *r.rs;
    if (factor >= rs.factors.size()) throw std::out_of_range("restrict_to_factor");
    auto sub = std::make_shared<RootSystem>(build_type_A(rs.factors[factor]));
    Representation out;
    out.rs = sub;
    int lo = rs.blockStart[factor], hi = rs.blockStart[factor + 1];
    for (const auto& [w, m] : r.weights) {
        RatVec v(w.coords.begin() + lo, w.coords.begin() + hi);
        out.weights[Weight{std::move(v)}] += m;
    }
    return out;
}

/// Hypothesis checks for the growth analysis: the weights must sum to zero
/// with multiplicities (unimodularity), span the full dual space (finite
/// kernel), and have 0 strictly inside their hull.
struct Diagnostics {
    bool sumZero = false;
    bool fullSpan = false;
    bool zeroInterior = false;
    bool ok() const { return sumZero && fullSpan && zeroInterior; }
    std::string failure() const {
        if (!sumZero) return "weights do not sum to zero";
        if (!fullSpan) return "weights do not span the dual of the Cartan subspace";
        if (!zeroInterior) return "zero is not interior to the weight hull";
        return "";
    }
};

inline Diagnostics validate(const Representation& r) {
    Diagnostics d;
    RatVec sum(r.rs->ambient(), Rat(0));
    RatMat span;
    for (const auto& [w, m] : r.weights) {
        sum = vadd(sum, vscale(Rat(m), w.coords));
        span.push_back(w.coords);
    }
    d.sumZero = is_zero(sum);
    d.fullSpan = rank(std::move(span)) == r.rs->rank();
    if (d.fullSpan) {
        Polytope c = Polytope::hull(r.distinct_points(), r.rs->ambient());
        d.zeroInterior = c.strictly_contains(RatVec(r.rs->ambient(), Rat(0)));
    }
    return d;
}

}  // namespace haarlim
