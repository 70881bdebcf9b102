// The growth analysis: the exponents (d, e) of the ball-volume law
// T^d ln(T)^e from the weight polytope and its dual, the frame (face, weight
// basis and change-of-variables data) behind the remainder constants, and the
// full constant suite lambda, tau, xi, xi', m, tau_1, xi_1, alpha_0.
#pragma once

#include <optional>

#include "haarlim/repspace.hpp"
#include "haarlim/sinhsum.hpp"

namespace haarlim {

/// Affine form in the deferred variables y_1..y_{r-s-1}: a constant part plus
/// linear coefficients. Weights carry an extra -1 in the constant.
struct AffineForm {
    Rat constant;
    RatVec linear;
    bool is_constant() const {
        for (const auto& x : linear)
            if (x != 0) return false;
        return true;
    }
};

struct Frame {
    Face facePrime;                        // a codimension-1 face containing the growth face
    std::vector<int> basisIdx;             // r indices into the flattened weight list
    std::vector<ChamberVector> dualBasis;  // chi_j^* with <chi_{basis_i} | chi_j^*> = delta_ij
    RatMat pairings;                       // n x r matrix <chi_i | chi_j^*>
    std::vector<Weight> omega1;            // ordering of the mu columns, beta first
    RatMat mu;                             // per omega1 element: s+1 affine coefficients, row sums 1
    std::vector<Weight> faceWeights;       // R: the distinct weights on the growth face
    std::vector<Rat> kappa;                // strictly positive, aligned with faceWeights
    std::vector<Rat> tauExp;               // tau_j = d * kappa(chi_j) - 1 for the first s+1 basis weights
    std::vector<AffineForm> weightForms;   // l_i per flattened weight
    std::vector<AffineForm> rootForms;     // l_alpha per positive root
    int s = 0;                             // dimension of the growth face
};

struct ConstantSet {
    Rat lambda;                      // sup of -1/l_i over constant negative weight forms; 0 if none
    Rat tau;                         // 0 when the pair set is empty
    std::optional<Rat> xi;           // nullopt = unconstrained (empty pair set)
    std::optional<Rat> xiPrimeSup;   // d - max over Delta of the secondary exponents; nullopt = no secondary term
    std::optional<Rat> alpha0V;      // v at Holder exponent 1 (only when e = 0)
    std::optional<Rat> alpha0;       // sup of admissible remainder exponents at Holder exponent 1
};

struct GrowthReport {
    Representation rep;
    Polytope C;      // weight hull
    Polytope Cdual;  // its polar
    Polytope Delta;  // dual intersected with the closed chamber
    Rat d;
    int e = 0;
    Face faceBeta;
    Face faceBetaDual;
    bool chamberOK = false;          // all dual-face vertices in the closed chamber
    bool normalGrowthStrict = false; // no proper factor ideal contains the dual face
    ExpSum expsum;
    OmegaSplit omega;
    Frame frame;
    ConstantSet consts;
    std::optional<int> mMin;          // single factor of rank >= 2 only
    std::optional<long> tau1Formula;  // 4 m + 2 dim(G)
    std::optional<long> tau1Table;    // tabulated literal where available
    std::optional<Rat> xi1Sup;        // d - max over Delta of (beta - l)
};

/// Delta: the dual body cut down to the closed positive chamber.
inline Polytope intersect_chamber(const Polytope& p, const RootSystem& rs) {
    std::vector<std::pair<RatVec, Rat>> cuts;
    for (const auto& alpha : rs.simpleRoots) cuts.push_back({vneg(alpha.coords), Rat(0)});
    return p.intersect_halfspaces(cuts);
}

/// Exact maximum of a linear form over Delta = C* intersected with the chamber.
inline Rat max_over_delta(const Polytope& delta, const Weight& gamma) {
    return delta.lp_max(gamma.coords).first;
}

inline std::pair<Rat, Face> exponents_faces(const Representation& rep, const Polytope& c, const Polytope& cd) {
    const Weight& beta = rep.rs->beta;
    Rat d = cd.lp_max(beta.coords).first;
    if (d <= 0) throw std::logic_error("growth exponent d must be positive");
    Face faceBeta = c.minimal_face(vscale(Rat(1) / d, beta.coords));
    return {d, faceBeta};
}

/// True iff every vertex of the dual growth face lies in the closed chamber.
inline bool chamber_check(const RootSystem& rs, const Face& faceBetaDual) {
    for (const auto& v : faceBetaDual.vertex_coords())
        if (!in_positive_chamber(rs, ChamberVector{v})) return false;
    return true;
}

/// For a product group: the growth of a proper normal subgroup equals that of
/// the whole group exactly when the dual growth face sits inside the
/// corresponding block subspace. Vertices supported on a proper sub-product
/// of blocks witness the failure. Single factors trivially pass.
inline bool normal_growth_strict(const RootSystem& rs, const Face& faceBetaDual) {
    const std::size_t nf = rs.factors.size();
    if (nf <= 1) return true;
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << nf); ++mask) {
        bool inside = true;
        for (const auto& v : faceBetaDual.vertex_coords()) {
            for (std::size_t b = 0; b < nf && inside; ++b) {
                if (mask & (std::size_t(1) << b)) continue;  // block belongs to the ideal
                for (int i = rs.blockStart[b]; i < rs.blockStart[b + 1]; ++i)
                    if (v[i] != 0) { inside = false; break; }
            }
            if (!inside) break;
        }
        if (inside) return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::vector<RatVec>> face_vertex_lists(const Polytope& c, const std::vector<int>& facetIdx) {
    std::vector<std::vector<RatVec>> lists;
    for (int j : facetIdx) {
        std::vector<RatVec> vs;
        for (const auto& v : c.vertices())
            if (dot(c.facets()[j].normal, v) == c.facets()[j].offset) vs.push_back(v);
        std::sort(vs.begin(), vs.end(), lex_less);
        lists.push_back(std::move(vs));
    }
    return lists;
}

inline bool lex_list_less(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return lex_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

}  // namespace detail

/// Deterministic frame construction. The codimension-1 face is the candidate
/// with lexicographically least sorted vertex list; the weight basis is the
/// lexicographically least index set that is a linear basis drawn from the
/// weights on that face, whose first s+1 members lie on the growth face and
/// affinely span it. An optional exhaustive mode revisits all choices.
inline Frame build_frame(const Representation& rep, const Polytope& c, const Rat& d, const Face& faceBeta,
                         const std::vector<Weight>& omega1, int fPrimeChoice = -1) {
    const RootSystem& rs = *rep.rs;
    const int r = rs.rank();
    Frame fr;
    fr.s = faceBeta.dim;
    const int s = fr.s;

    // Candidate codimension-1 faces are the facets containing the growth face.
    std::vector<int> candidates = faceBeta.tightFacets;
    if (candidates.empty()) throw std::logic_error("build_frame: growth face is not proper");
    int chosen;
    if (fPrimeChoice >= 0) {
        chosen = candidates.at(fPrimeChoice);
    } else {
        auto lists = detail::face_vertex_lists(c, candidates);
        int best = 0;
        for (std::size_t i = 1; i < lists.size(); ++i)
            if (detail::lex_list_less(lists[i], lists[best])) best = static_cast<int>(i);
        chosen = candidates[best];
    }
    std::vector<int> seed;
    for (std::size_t i = 0; i < c.vertices().size(); ++i)
        if (dot(c.facets()[chosen].normal, c.vertices()[i]) == c.facets()[chosen].offset)
            seed.push_back(static_cast<int>(i));
    fr.facePrime = c.face_from_vertices(seed);

    const auto flat = rep.flattened();
    const int n = static_cast<int>(flat.size());
    const auto& facet = c.facets()[chosen];
    std::vector<int> onPrime, onFace;
    std::vector<bool> isOnFace(n, false);
    for (int i = 0; i < n; ++i) {
        if (dot(facet.normal, flat[i].coords) != facet.offset) continue;
        onPrime.push_back(i);
        if (c.face_contains(faceBeta, flat[i].coords)) {
            onFace.push_back(i);
            isOnFace[i] = true;
        }
    }

    // Basis selection: the first s+1 slots hold an affine basis of the
    // growth face drawn from its weights, the remaining slots complete it to
    // a linear basis using weights of the chosen codimension-1 face. Both
    // the head and its completion are the lexicographically least index
    // subsets that work.
    if (static_cast<int>(onPrime.size()) < r)
        throw std::runtime_error("build_frame: too few weights on the chosen face");
    auto combinations = [](int total, int take) {
        std::vector<std::vector<int>> out;
        if (take > total) return out;
        std::vector<int> comb(take);
        for (int i = 0; i < take; ++i) comb[i] = i;
        for (;;) {
            out.push_back(comb);
            int i = take - 1;
            while (i >= 0 && comb[i] == total - take + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
        }
        return out;
    };
    std::vector<int> tailPool;
    bool ok = false;
    for (const auto& hc : combinations(static_cast<int>(onFace.size()), s + 1)) {
        std::vector<int> head;
        std::vector<RatVec> headPts;
        for (int i : hc) {
            head.push_back(onFace[i]);
            headPts.push_back(flat[onFace[i]].coords);
        }
        if (affine_dim(headPts) != s) continue;
        tailPool.clear();
        for (int i : onPrime)
            if (std::find(head.begin(), head.end(), i) == head.end()) tailPool.push_back(i);
        for (const auto& tc : combinations(static_cast<int>(tailPool.size()), r - s - 1)) {
            RatMat all;
            for (int i : head) all.push_back(flat[i].coords);
            for (int i : tc) all.push_back(flat[tailPool[i]].coords);
            if (rank(std::move(all)) != r) continue;
            fr.basisIdx = head;
            for (int i : tc) fr.basisIdx.push_back(tailPool[i]);
            ok = true;
            break;
        }
        if (ok) break;
    }
    if (!ok) throw std::runtime_error("build_frame: weights on the chosen face contain no admissible basis");

    // Dual basis chi_j^*: solve for sum-zero-per-block vectors pairing to
    // delta_ij against the basis weights.
    const int m = rs.ambient();
    const int nblocks = static_cast<int>(rs.factors.size());
    RatMat sys;
    for (int i = 0; i < r; ++i) sys.push_back(flat[fr.basisIdx[i]].coords);
    for (int b = 0; b < nblocks; ++b) {
        RatVec row(m, Rat(0));
        for (int i = rs.blockStart[b]; i < rs.blockStart[b + 1]; ++i) row[i] = 1;
        sys.push_back(std::move(row));
    }
    for (int j = 0; j < r; ++j) {
        RatVec rhs(r + nblocks, Rat(0));
        rhs[j] = 1;
        auto y = solve(sys, rhs);
        if (!y) throw std::logic_error("build_frame: dual basis system inconsistent");
        fr.dualBasis.push_back(ChamberVector{*y});
    }

    fr.pairings.assign(n, RatVec(r));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) fr.pairings[i][j] = pairing(flat[i], fr.dualBasis[j]);

    // Affine coefficients of each collected exponent on the growth face,
    // relative to the affine basis chi_1..chi_{s+1}.
    fr.omega1 = omega1;
    std::sort(fr.omega1.begin(), fr.omega1.end());
    auto betaIt = std::find(fr.omega1.begin(), fr.omega1.end(), rs.beta);
    if (betaIt == fr.omega1.end()) throw std::logic_error("build_frame: beta missing from the face exponents");
    std::rotate(fr.omega1.begin(), betaIt, betaIt + 1);
    for (const auto& g : fr.omega1) {
        RatMat a;
        RatVec b;
        for (int row = 0; row < m; ++row) {
            RatVec ar(s + 1);
            for (int i = 0; i <= s; ++i) ar[i] = flat[fr.basisIdx[i]].coords[row];
            a.push_back(std::move(ar));
            b.push_back(g.coords[row] / d);
        }
        a.push_back(RatVec(s + 1, Rat(1)));
        b.push_back(Rat(1));
        auto muRow = solve(a, b);
        if (!muRow) throw std::logic_error("build_frame: exponent not affine over the basis head");
        fr.mu.push_back(*muRow);
    }

    // Max-min barycentric coefficients of beta/d over the face weights.
    for (const auto& [w, mult] : rep.weights)
        if (c.face_contains(faceBeta, w.coords)) fr.faceWeights.push_back(w);
    std::vector<RatVec> gens;
    for (const auto& w : fr.faceWeights) gens.push_back(w.coords);
    auto bary = barycentric_interior(vscale(Rat(1) / d, rs.beta.coords), gens);
    if (!bary.ok) throw std::logic_error("build_frame: growth point not interior to its face: " + bary.reason);
    fr.kappa = bary.kappa;

    for (int i = 0; i <= s; ++i) {
        const Weight& chi = flat[fr.basisIdx[i]];
        auto it = std::find(fr.faceWeights.begin(), fr.faceWeights.end(), chi);
        if (it == fr.faceWeights.end()) throw std::logic_error("build_frame: basis head not among face weights");
        Rat tj = d * fr.kappa[it - fr.faceWeights.begin()] - 1;
        if (tj <= -1) throw std::logic_error("build_frame: integrability exponent not above -1");
        fr.tauExp.push_back(std::move(tj));
    }

    auto form_for = [&](const RatVec& pr, bool isWeight) {
        AffineForm f;
        f.constant = isWeight ? Rat(-1) : Rat(0);
        for (int j = 0; j <= s; ++j) f.constant += pr[j];
        for (int j = s + 1; j < r; ++j) f.linear.push_back(pr[j]);
        return f;
    };
    for (int i = 0; i < n; ++i) fr.weightForms.push_back(form_for(fr.pairings[i], true));
    for (const auto& [alpha, mult] : rs.positiveRoots) {
        RatVec pr(r);
        for (int j = 0; j < r; ++j) pr[j] = pairing(alpha, fr.dualBasis[j]);
        fr.rootForms.push_back(form_for(pr, false));
    }
    return fr;
}

/// sup over constant strictly negative weight forms of -1/l_i; 0 when the
/// set is empty.
inline Rat lambda_const(const Frame& fr) {
    Rat best = 0;
    for (const auto& f : fr.weightForms) {
        if (!f.is_constant() || f.constant >= 0) continue;
        best = std::max(best, Rat(-1) / f.constant);
    }
    return best;
}

/// tau = sup and xi = inf of the two ratios over the pairs (i, j) with l_i a
/// nonzero constant and <chi_i | chi_j^*> < 0, j among the first s+1 basis
/// slots. An empty pair set gives tau = 0 and leaves xi unconstrained.
inline std::pair<Rat, std::optional<Rat>> tau_xi(const Frame& fr) {
    const int s = fr.s;
    std::optional<Rat> tau, xi;
    for (std::size_t i = 0; i < fr.weightForms.size(); ++i) {
        const auto& f = fr.weightForms[i];
        if (!f.is_constant() || f.constant == 0) continue;
        for (int j = 0; j <= s; ++j) {
            const Rat& p = fr.pairings[i][j];
            if (p >= 0) continue;
            Rat tc = -(fr.tauExp[j] + 1) / (Rat(s + 1) * p);
            Rat xc = f.constant * (fr.tauExp[j] + 1) / (Rat(s + 1) * p);
            if (!tau || tc > *tau) tau = tc;
            if (!xi || xc < *xi) xi = xc;
        }
    }
    return {tau.value_or(Rat(0)), xi};
}

/// d minus the largest maximum over Delta among the off-face exponents; the
/// supremum of admissible secondary-term rates (attained bound is strict).
inline std::optional<Rat> xi_prime_sup(const Polytope& delta, const Rat& d, const std::vector<Weight>& omega2) {
    if (omega2.empty()) return std::nullopt;
    std::optional<Rat> mx;
    for (const auto& g : omega2) {
        Rat v = max_over_delta(delta, g);
        if (!mx || v > *mx) mx = v;
    }
    return d - *mx;
}

/// d minus the maximum over Delta of beta - l, l the strongly orthogonal
/// half-sum; the theta -> 0 supremum of admissible lattice remainder rates.
inline Rat xi1_sup(const RootSystem& rs, const Polytope& delta, const Rat& d) {
    if (!rs.single_factor() || rs.rank() < 2)
        throw std::invalid_argument("xi1_sup: requires a single factor of rank >= 2");
    Rat u = max_over_delta(delta, rs.beta - rs.halfSumOrthogonal);
    Rat v = d - u;
    if (v <= 0) throw std::logic_error("xi1_sup: expected a strictly positive exponent");
    return v;
}

struct Alpha0Result {
    std::optional<Rat> v;       // nullopt = unconstrained
    std::optional<Rat> alpha0;  // nullopt = unconstrained
};

/// v = inf(1/lambda, xi/(alpha + tau)) and alpha0 = inf(xi - tau v, xi', v)
/// for a Holder exponent alpha in (0, 1]. lambda = 0 removes the 1/lambda
/// constraint; an unconstrained xi removes its terms.
inline Alpha0Result alpha0(const ConstantSet& cs, int e, const Rat& alpha) {
    if (e != 0) throw std::invalid_argument("alpha0: defined only for e = 0");
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha0: Holder exponent must be in (0, 1]");
    Alpha0Result out;
    std::optional<Rat> v;
    if (cs.lambda > 0) v = Rat(1) / cs.lambda;
    if (cs.xi) {
        Rat w = *cs.xi / (alpha + cs.tau);
        if (!v || w < *v) v = w;
    }
    out.v = v;
    std::optional<Rat> a0;
    auto consider = [&](const std::optional<Rat>& x) {
        if (x && (!a0 || *x < *a0)) a0 = *x;
    };
    if (cs.xi && v) consider(*cs.xi - cs.tau * *v);
    consider(cs.xiPrimeSup);
    consider(v);
    out.alpha0 = a0;
    return out;
}

struct AnalyzeOptions {
    bool optimizeFrame = false;  // exhaustively search face/basis choices for the best xi
    Rat holderAlpha = Rat(1);
};

inline GrowthReport analyze(const Representation& rep, const AnalyzeOptions& opts = {}) {
    Diagnostics diag = validate(rep);
    if (!diag.ok()) throw std::invalid_argument("analyze: invalid representation: " + diag.failure());

    GrowthReport rpt;
    rpt.rep = rep;
    const RootSystem& rs = *rep.rs;
    rpt.C = Polytope::hull(rep.distinct_points(), rs.ambient());
    rpt.Cdual = rpt.C.dual();

    auto [d, faceBeta] = exponents_faces(rep, rpt.C, rpt.Cdual);
    rpt.d = d;
    rpt.faceBeta = faceBeta;
    rpt.faceBetaDual = dual_face(rpt.C, rpt.Cdual, faceBeta);
    rpt.e = rpt.faceBetaDual.dim;
    if (rpt.e != (rs.rank() - 1) - faceBeta.dim) throw std::logic_error("analyze: face codimension mismatch");

    rpt.chamberOK = chamber_check(rs, rpt.faceBetaDual);
    if (!rpt.chamberOK) throw std::logic_error("analyze: dual growth face escaped the chamber");
    rpt.normalGrowthStrict = normal_growth_strict(rs, rpt.faceBetaDual);

    rpt.Delta = intersect_chamber(rpt.Cdual, rs);

    rpt.expsum = expand(rs);
    if (!audit_hull_membership(rpt.expsum, rpt.C, rpt.d))
        throw std::logic_error("analyze: a density exponent escaped the scaled hull");
    rpt.omega = split(rpt.expsum, rpt.C, rpt.faceBeta, rpt.d);

    rpt.frame = build_frame(rep, rpt.C, rpt.d, rpt.faceBeta, rpt.omega.omega1);
    rpt.consts.lambda = lambda_const(rpt.frame);
    auto tx = tau_xi(rpt.frame);
    rpt.consts.tau = tx.first;
    rpt.consts.xi = tx.second;
    if (opts.optimizeFrame) {
        // Revisit every admissible codimension-1 face; keep the frame with
        // the largest xi, then the smallest tau, then the smallest lambda.
        for (std::size_t i = 0; i < rpt.faceBeta.tightFacets.size(); ++i) {
            Frame cand = build_frame(rep, rpt.C, rpt.d, rpt.faceBeta, rpt.omega.omega1, static_cast<int>(i));
            auto [t, x] = tau_xi(cand);
            Rat l = lambda_const(cand);
            auto better = [&]() {
                if (x && rpt.consts.xi && *x != *rpt.consts.xi) return *x > *rpt.consts.xi;
                if (static_cast<bool>(x) != static_cast<bool>(rpt.consts.xi)) return !x;  // unconstrained wins
                if (t != rpt.consts.tau) return t < rpt.consts.tau;
                return l < rpt.consts.lambda;
            };
            if (better()) {
                rpt.frame = std::move(cand);
                rpt.consts.lambda = l;
                rpt.consts.tau = t;
                rpt.consts.xi = x;
            }
        }
    }
    rpt.consts.xiPrimeSup = xi_prime_sup(rpt.Delta, rpt.d, rpt.omega.omega2);

    if (rs.single_factor() && rs.rank() >= 2) {
        rpt.mMin = m_minimal(rs);
        rpt.tau1Formula = tau1(rs);
        rpt.tau1Table = rs.tau1Table;
        rpt.xi1Sup = xi1_sup(rs, rpt.Delta, rpt.d);
    }
    if (rpt.e == 0) {
        auto a0 = alpha0(rpt.consts, rpt.e, opts.holderAlpha);
        rpt.consts.alpha0V = a0.v;
        rpt.consts.alpha0 = a0.alpha0;
    }
    return rpt;
}

}  // namespace haarlim
