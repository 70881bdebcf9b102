// Named example representations used across tests, the verification suite
// and the docs, plus a deterministic generator of random valid
// representations built from constructor compositions.
#pragma once

#include <random>

#include "haarlim/repspace.hpp"

namespace haarlim {

inline std::shared_ptr<const RootSystem> sl(int n) {
    return std::make_shared<const RootSystem>(build_type_A(n));
}

/// Defining representation of SL(n,R) on R^n.
inline Representation standard_rep(int n) { return standard(sl(n)); }

/// Adjoint representation of SL(n,R).
inline Representation adjoint_rep(int n) { return adjoint(sl(n)); }

/// SL(3,R) on R^3 + (R^3)^*: the regular-hexagon weight system.
inline Representation std_plus_dual_rep() {
    auto rs = sl(3);
    return direct_sum(standard(rs), dual(standard(rs)));
}

/// SL(2,R) x SL(2,R) on R^2 tensor sl(2,R): standard times adjoint. The dual
/// growth face sits inside the first factor, so proper normal subgroup
/// growth is not strict.
inline Representation product_counterexample_rep() {
    return external_tensor(standard_rep(2), adjoint_rep(2));
}

struct RandomRepOptions {
    int maxDistinctWeights = 18;
    int maxDimV = 40;
};

/// Deterministic random valid representation: a composition of constructors
/// over a small root system, rejection-sampled to stay desk sized. Every
/// output passes validate().
inline Representation random_representation(std::mt19937_64& rng, const RandomRepOptions& opts = {}) {
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };
    for (;;) {
        std::shared_ptr<const RootSystem> rs;
        bool product = pick(4) == 0;
        if (product) {
            int n1 = 2 + pick(2), n2 = 2 + pick(2);
            rs = std::make_shared<const RootSystem>(build_product(build_type_A(n1), build_type_A(n2)));
        } else {
            rs = sl(2 + pick(3));
        }
        auto leaf = [&](std::shared_ptr<const RootSystem> g) {
            Representation b = (g->single_factor() && pick(2) == 0) ? standard(g) : adjoint(g);
            return pick(3) == 0 ? dual(b) : b;
        };
        Representation rep = [&] {
            if (!product) return leaf(rs);
            auto a = build_type_A(rs->factors[0]);
            auto b = build_type_A(rs->factors[1]);
            auto ra = leaf(std::make_shared<const RootSystem>(a));
            auto rb = leaf(std::make_shared<const RootSystem>(b));
            return external_tensor(ra, rb);
        }();
        int extraOps = pick(3);
        for (int k = 0; k < extraOps; ++k) {
            int op = pick(3);
            if (op == 0) rep = direct_sum(rep, dual(rep));
            else if (op == 1 && !product) rep = tensor(rep, leaf(rep.rs));
            else rep = dual(rep);
        }
        if (static_cast<int>(rep.weights.size()) > opts.maxDistinctWeights) continue;
        if (rep.dim_v() > opts.maxDimV) continue;
        if (!validate(rep).ok()) continue;
        return rep;
    }
}

}  // namespace haarlim
