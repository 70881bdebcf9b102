// Symbolic expansion of the Cartan integration density
// prod_{alpha > 0} (2 sinh<alpha|a>)^{m_alpha} into a signed exponential sum
// with exact integer coefficients, its split relative to the growth face, and
// the membership audit of the scaled exponents in the weight hull.
#pragma once

#include <cmath>
#include <map>

#include "haarlim/polytope.hpp"
#include "haarlim/rootsys.hpp"

namespace haarlim {

struct ExpSum {
    std::map<Weight, long long> terms;  // exponent -> nonzero integer coefficient

    double eval(const std::vector<double>& a) const {
        double s = 0;
        for (const auto& [g, h] : terms) {
            double e = 0;
            for (std::size_t i = 0; i < a.size(); ++i) e += to_double(g.coords[i]) * a[i];
            s += static_cast<double>(h) * std::exp(e);
        }
        return s;
    }
};

/// Expand each factor 2 sinh<alpha|.> as e^alpha - e^{-alpha}, multiply out
/// and collect like exponents eagerly, dropping cancelled terms.
inline ExpSum expand(const RootSystem& rs) {
    ExpSum es;
    es.terms[Weight{RatVec(rs.ambient(), Rat(0))}] = 1;
    for (const auto& [alpha, mult] : rs.positiveRoots) {
        for (int rep = 0; rep < mult; ++rep) {
            std::map<Weight, long long> next;
            for (const auto& [g, h] : es.terms) {
                next[g + alpha] += h;
                next[g - alpha] -= h;
            }
            es.terms.clear();
            for (auto& [g, h] : next)
                if (h != 0) es.terms.emplace(g, h);
        }
    }
    return es;
}

/// The signed multiset before collection: one (exponent, sign) entry per
/// choice of sign in each factor. Exponential in the number of positive
/// roots; intended for small fixtures only.
inline std::vector<std::pair<Weight, int>> expand_multiset(const RootSystem& rs) {
    std::vector<std::pair<Weight, int>> cur = {{Weight{RatVec(rs.ambient(), Rat(0))}, 1}};
    for (const auto& [alpha, mult] : rs.positiveRoots) {
        for (int rep = 0; rep < mult; ++rep) {
            std::vector<std::pair<Weight, int>> next;
            next.reserve(cur.size() * 2);
            for (const auto& [g, s] : cur) {
                next.push_back({g + alpha, s});
                next.push_back({g - alpha, -s});
            }
            cur = std::move(next);
        }
    }
    return cur;
}

struct OmegaSplit {
    std::vector<Weight> omega1;  // gamma with gamma/d on the growth face
    std::vector<Weight> omega2;  // the rest
};

inline OmegaSplit split(const ExpSum& es, const Polytope& c, const Face& faceBeta, const Rat& d) {
    OmegaSplit out;
    for (const auto& [g, h] : es.terms) {
        RatVec scaled = vscale(Rat(1) / d, g.coords);
        if (c.face_contains(faceBeta, scaled))
            out.omega1.push_back(g);
        else
            out.omega2.push_back(g);
    }
    return out;
}

/// Every nonzero exponent, scaled by 1/d, must land inside the weight hull.
inline bool audit_hull_membership(const ExpSum& es, const Polytope& c, const Rat& d) {
    for (const auto& [g, h] : es.terms) {
        if (is_zero(g.coords)) continue;
        if (!c.contains(vscale(Rat(1) / d, g.coords))) return false;
    }
    return true;
}

}  // namespace haarlim
