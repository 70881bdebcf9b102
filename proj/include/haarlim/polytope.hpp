// Exact rational convex polytopes: hull with irredundant V- and H-
// representations, polar duality, the face machinery, linear maximization
// with argmax-face extraction, chamber intersection, and the max-min
// barycentric-coefficient program.
//
// Polytopes may sit in a proper linear subspace of the ambient coordinate
// space (sum-zero blocks, faces, chamber slices); the affine hull is carried
// explicitly and all facet data lives inside its direction space. Sizes are
// desk scale (dimension <= 6, a few dozen points), so facets and vertices are
// enumerated by exhaustive exact rank computations rather than incremental
// geometry.
#pragma once

#include <algorithm>
#include <optional>
#include <set>

#include "haarlim/linalg.hpp"
#include "haarlim/rational.hpp"

namespace haarlim {

struct Facet {
    RatVec normal;  // primitive integer vector in the hull's direction space
    Rat offset;     // inequality <normal | x> <= offset

    bool operator<(const Facet& o) const {
        if (normal != o.normal) return lex_less(normal, o.normal);
        return offset < o.offset;
    }
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

struct Face;

class Polytope {
  public:
    /// Convex hull of a nonempty set of rational points. Degenerate and
    /// lower-dimensional hulls are allowed; dim records the true dimension.
    static Polytope hull(std::vector<RatVec> points, int ambientDim);

    /// Polar dual within the linear span; requires 0 strictly interior.
    /// Vertex i of the dual corresponds to facet i of this polytope and
    /// facet j of the dual to vertex j of this polytope.
    Polytope dual() const;

    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<std::pair<RatVec, Rat>>& hull_equalities() const { return hullEqs_; }

    bool contains(const RatVec& x) const;
    bool strictly_contains(const RatVec& x) const;  // interior relative to the affine hull

    /// Indices of facets tight at x (x need not belong to the polytope).
    std::vector<int> tight_facets(const RatVec& x) const;

    Face minimal_face(const RatVec& x) const;
    Face face_from_vertices(const std::vector<int>& vertIdx) const;
    Face whole_as_face() const;

    /// Exact maximum of the linear form gamma together with the face spanned
    /// by the maximizing vertices.
    std::pair<Rat, Face> lp_max(const RatVec& gamma) const;

    /// Intersection with extra halfspaces <normal|x> <= offset, returned as a
    /// freshly irredundant polytope. Throws if the intersection is empty.
    Polytope intersect_halfspaces(const std::vector<std::pair<RatVec, Rat>>& extra) const;

    /// Exact membership of x in the given face of this polytope.
    bool face_contains(const Face& f, const RatVec& x) const;

  private:
    int ambient_ = 0;
    int dim_ = 0;
    std::vector<RatVec> verts_;      // canonical lexicographic order unless built by dual()
    std::vector<Facet> facets_;      // aligned with locNormals_
    std::vector<RatVec> locNormals_;
    std::vector<std::pair<RatVec, Rat>> hullEqs_;  // affine-hull equalities <u|x> = c
    RatVec origin_;
    RatMat dirBasis_;      // rows span the direction space of the affine hull
    RatMat dualDirBasis_;  // rows b*_i with <b*_i, dir_j> = delta_ij

    RatVec local_coords(const RatVec& x) const;
    void finish_from_verts_and_facets();  // fills locNormals_, checks invariants
    static void canonicalize_facet(RatVec& normal, Rat& offset);
    friend struct Face;
};

/// A face given by its tight-facet index set, with vertex list, dimension and
/// a relative-interior point. Holds its vertex coordinates by value, so faces
/// stay valid independently of the polytope object they came from.
struct Face {
    std::vector<int> tightFacets;  // sorted; empty means the whole polytope
    std::vector<int> vertIdx;      // sorted indices into the parent's vertices()
    std::vector<RatVec> verts;     // coordinates, aligned with vertIdx
    int dim = -1;
    RatVec relint;

    bool proper() const { return !tightFacets.empty(); }
    const std::vector<RatVec>& vertex_coords() const { return verts; }
    bool operator==(const Face& o) const { return tightFacets == o.tightFacets && verts == o.verts; }
};

inline void Polytope::canonicalize_facet(RatVec& normal, Rat& offset) {
    Rat f = make_primitive(normal);
    offset *= f;
}

inline RatVec Polytope::local_coords(const RatVec& x) const {
    RatVec d = vsub(x, origin_);
    RatVec t(dim_);
    for (int i = 0; i < dim_; ++i) t[i] = dot(dualDirBasis_[i], d);
    return t;
}

inline Polytope Polytope::hull(std::vector<RatVec> points, int ambientDim) {
    if (points.empty()) throw std::invalid_argument("hull: no points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != ambientDim) throw std::invalid_argument("hull: dimension mismatch");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Polytope P;
    P.ambient_ = ambientDim;
    P.origin_ = points[0];

    // Affine basis from point differences, first independent ones win.
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d = vsub(points[i], P.origin_);
        RatMat test = P.dirBasis_;
        test.push_back(d);
        if (rank(std::move(test)) == static_cast<int>(P.dirBasis_.size()) + 1) P.dirBasis_.push_back(std::move(d));
    }
    P.dim_ = static_cast<int>(P.dirBasis_.size());

    if (P.dim_ > 0) {
        // Dual direction basis: rows of G^{-1} * dirBasis, G the Gram matrix.
        RatMat g(P.dim_, RatVec(P.dim_));
        for (int i = 0; i < P.dim_; ++i)
            for (int j = 0; j < P.dim_; ++j) g[i][j] = dot(P.dirBasis_[i], P.dirBasis_[j]);
        auto gi = inverse(g);
        if (!gi) throw std::logic_error("hull: singular Gram matrix");
        P.dualDirBasis_.assign(P.dim_, RatVec(ambientDim, Rat(0)));
        for (int i = 0; i < P.dim_; ++i)
            for (int j = 0; j < P.dim_; ++j)
                for (int k = 0; k < ambientDim; ++k) P.dualDirBasis_[i][k] += (*gi)[i][j] * P.dirBasis_[j][k];
    }

    // Affine-hull equalities: null space of the direction basis.
    if (P.dim_ < ambientDim) {
        for (auto& u : null_space(P.dirBasis_.empty() ? RatMat{RatVec(ambientDim, Rat(0))} : P.dirBasis_)) {
            Rat c = dot(u, P.origin_);
            canonicalize_facet(u, c);
            P.hullEqs_.push_back({std::move(u), std::move(c)});
        }
        std::sort(P.hullEqs_.begin(), P.hullEqs_.end(),
                  [](const auto& a, const auto& b) { return a.first != b.first ? lex_less(a.first, b.first) : a.second < b.second; });
    }

    if (P.dim_ == 0) {
        P.verts_ = {points[0]};
        return P;
    }

    // Facet enumeration: every hyperplane through dim affinely independent
    // points with all points on one side is a facet, and all facets arise
    // this way. Work in local coordinates where the hull is full-dimensional.
    std::vector<RatVec> loc;
    loc.reserve(points.size());
    for (const auto& p : points) loc.push_back(P.local_coords(p));

    const int ld = P.dim_;
    const int np = static_cast<int>(points.size());
    std::set<std::pair<RatVec, Rat>> found;  // canonical local (normal, offset)
    std::vector<int> comb(ld);
    for (int i = 0; i < ld; ++i) comb[i] = i;
    auto next_comb = [&]() {
        int i = ld - 1;
        while (i >= 0 && comb[i] == np - ld + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < ld; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (np >= ld) {
        do {
            RatMat diffs;
            for (int i = 1; i < ld; ++i) diffs.push_back(vsub(loc[comb[i]], loc[comb[0]]));
            RatMat ns = diffs.empty() ? RatMat{RatVec(ld, Rat(0))} : diffs;
            RatMat kernel = null_space(ns);
            if (kernel.size() != 1) continue;  // affinely dependent selection
            RatVec n = kernel[0];
            Rat c = dot(n, loc[comb[0]]);
            bool below = true, above = true;
            for (const auto& q : loc) {
                Rat v = dot(n, q);
                if (v > c) below = false;
                if (v < c) above = false;
                if (!below && !above) break;
            }
            if (!below && !above) continue;
            if (!below) {
                n = vneg(n);
                c = -c;
            }
            canonicalize_facet(n, c);
            found.insert({std::move(n), std::move(c)});
        } while (next_comb());
    }

    for (const auto& [nl, cl] : found) {
        // Lift the local normal to the ambient direction space.
        RatVec n(ambientDim, Rat(0));
        for (int i = 0; i < ld; ++i)
            for (int k = 0; k < ambientDim; ++k) n[k] += nl[i] * P.dualDirBasis_[i][k];
        Rat c = cl + dot(n, P.origin_);
        canonicalize_facet(n, c);
        P.facets_.push_back({std::move(n), std::move(c)});
    }
    std::sort(P.facets_.begin(), P.facets_.end());

    // Vertices: points whose tight facet normals span the direction space.
    P.verts_.clear();
    for (int i = 0; i < np; ++i) {
        RatMat tight;
        for (const auto& [nl, cl] : found)
            if (dot(nl, loc[i]) == cl) tight.push_back(nl);
        if (rank(std::move(tight)) == ld) P.verts_.push_back(points[i]);
    }
    P.finish_from_verts_and_facets();
    return P;
}

inline void Polytope::finish_from_verts_and_facets() {
    locNormals_.clear();
    for (const auto& f : facets_) {
        RatVec nl(dim_);
        for (int i = 0; i < dim_; ++i) nl[i] = dot(f.normal, dirBasis_[i]);
        locNormals_.push_back(std::move(nl));
    }
    for (const auto& v : verts_) {
        if (!contains(v)) throw std::logic_error("polytope invariant violated: vertex outside facets");
    }
    // Every facet must be tight at dim affinely independent vertices.
    for (std::size_t j = 0; j < facets_.size(); ++j) {
        std::vector<RatVec> on;
        for (const auto& v : verts_)
            if (dot(facets_[j].normal, v) == facets_[j].offset) on.push_back(v);
        if (affine_dim(on) != dim_ - 1) throw std::logic_error("polytope invariant violated: redundant facet");
    }
}

inline bool Polytope::contains(const RatVec& x) const {
    for (const auto& [u, c] : hullEqs_)
        if (dot(u, x) != c) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

inline bool Polytope::strictly_contains(const RatVec& x) const {
    for (const auto& [u, c] : hullEqs_)
        if (dot(u, x) != c) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) >= f.offset) return false;
    return dim_ > 0;
}

inline std::vector<int> Polytope::tight_facets(const RatVec& x) const {
    std::vector<int> t;
    for (std::size_t j = 0; j < facets_.size(); ++j)
        if (dot(facets_[j].normal, x) == facets_[j].offset) t.push_back(static_cast<int>(j));
    return t;
}

inline Face Polytope::whole_as_face() const {
    Face f;
    f.dim = dim_;
    for (std::size_t i = 0; i < verts_.size(); ++i) f.vertIdx.push_back(static_cast<int>(i));
    f.verts = verts_;
    RatVec avg(ambient_, Rat(0));
    for (const auto& v : verts_) avg = vadd(avg, v);
    f.relint = vscale(Rat(1, static_cast<long>(verts_.size())), avg);
    return f;
}

inline Face Polytope::face_from_vertices(const std::vector<int>& vertIdx) const {
    if (vertIdx.empty()) throw std::invalid_argument("face_from_vertices: empty seed");
    // Tight set closure: facets tight at all seed vertices, then all vertices
    // tight at that facet set.
    std::vector<int> tight;
    for (std::size_t j = 0; j < facets_.size(); ++j) {
        bool all = true;
        for (int i : vertIdx)
            if (dot(facets_[j].normal, verts_[i]) != facets_[j].offset) { all = false; break; }
        if (all) tight.push_back(static_cast<int>(j));
    }
    if (tight.empty()) return whole_as_face();
    Face f;
    f.tightFacets = tight;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        bool all = true;
        for (int j : tight)
            if (dot(facets_[j].normal, verts_[i]) != facets_[j].offset) { all = false; break; }
        if (all) {
            f.vertIdx.push_back(static_cast<int>(i));
            f.verts.push_back(verts_[i]);
        }
    }
    f.dim = affine_dim(f.verts);
    RatVec avg(ambient_, Rat(0));
    for (int i : f.vertIdx) avg = vadd(avg, verts_[i]);
    f.relint = vscale(Rat(1, static_cast<long>(f.vertIdx.size())), avg);
    return f;
}

inline Face Polytope::minimal_face(const RatVec& x) const {
    if (!contains(x)) throw std::invalid_argument("minimal_face: point not in polytope");
    std::vector<int> tight = tight_facets(x);
    if (tight.empty()) return whole_as_face();
    std::vector<int> seed;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        bool all = true;
        for (int j : tight)
            if (dot(facets_[j].normal, verts_[i]) != facets_[j].offset) { all = false; break; }
        if (all) seed.push_back(static_cast<int>(i));
    }
    Face f = face_from_vertices(seed);
    if (f.tightFacets != tight) throw std::logic_error("minimal_face: tight-set closure mismatch");
    return f;
}

inline bool Polytope::face_contains(const Face& f, const RatVec& x) const {
    if (!contains(x)) return false;
    for (int j : f.tightFacets)
        if (dot(facets_[j].normal, x) != facets_[j].offset) return false;
    return true;
}

inline std::pair<Rat, Face> Polytope::lp_max(const RatVec& gamma) const {
    if (verts_.empty()) throw std::logic_error("lp_max: empty polytope");
    Rat best = dot(gamma, verts_[0]);
    for (const auto& v : verts_) best = std::max(best, dot(gamma, v));
    std::vector<int> argmax;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (dot(gamma, verts_[i]) == best) argmax.push_back(static_cast<int>(i));
    return {best, face_from_vertices(argmax)};
}

inline Polytope Polytope::dual() const {
    for (const auto& [u, c] : hullEqs_)
        if (c != 0) throw std::invalid_argument("dual: affine hull does not pass through 0");
    RatVec zero(ambient_, Rat(0));
    if (!strictly_contains(zero)) throw std::invalid_argument("dual: 0 not strictly interior");

    Polytope D;
    D.ambient_ = ambient_;
    D.dim_ = dim_;
    D.origin_ = zero;
    D.dirBasis_ = dirBasis_;
    D.dualDirBasis_ = dualDirBasis_;
    D.hullEqs_ = hullEqs_;
    for (const auto& f : facets_) D.verts_.push_back(vscale(Rat(1) / f.offset, f.normal));
    for (const auto& v : verts_) {
        RatVec n = v;
        Rat c = 1;
        canonicalize_facet(n, c);
        D.facets_.push_back({std::move(n), std::move(c)});
    }
    D.finish_from_verts_and_facets();
    return D;
}

inline Polytope Polytope::intersect_halfspaces(const std::vector<std::pair<RatVec, Rat>>& extra) const {
    // Vertex enumeration over the combined constraint system inside the
    // affine hull, then a fresh hull of the result.
    std::vector<std::pair<RatVec, Rat>> cons;
    for (const auto& f : facets_) cons.push_back({f.normal, f.offset});
    cons.insert(cons.end(), extra.begin(), extra.end());

    const int ld = dim_;
    std::vector<std::pair<RatVec, Rat>> lcons;
    for (const auto& [n, c] : cons) {
        RatVec nl(ld);
        for (int i = 0; i < ld; ++i) nl[i] = dot(n, dirBasis_[i]);
        lcons.push_back({std::move(nl), c - dot(n, origin_)});
    }

    std::set<RatVec> vertsLoc;
    const int nc = static_cast<int>(lcons.size());
    std::vector<int> comb(ld);
    for (int i = 0; i < ld; ++i) comb[i] = i;
    auto next_comb = [&]() {
        int i = ld - 1;
        while (i >= 0 && comb[i] == nc - ld + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < ld; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (ld == 0) {
        for (const auto& [n, c] : cons)
            if (dot(n, origin_) > c) throw std::invalid_argument("intersect_halfspaces: empty intersection");
        return *this;
    }
    do {
        RatMat a;
        RatVec b;
        for (int i : comb) {
            a.push_back(lcons[i].first);
            b.push_back(lcons[i].second);
        }
        if (rank(a) != ld) continue;
        auto x = solve(a, b);
        if (!x) continue;
        bool feas = true;
        for (const auto& [nl, cl] : lcons)
            if (dot(nl, *x) > cl) { feas = false; break; }
        if (feas) vertsLoc.insert(*x);
    } while (next_comb());

    if (vertsLoc.empty()) throw std::invalid_argument("intersect_halfspaces: empty intersection");
    std::vector<RatVec> verts;
    for (const auto& t : vertsLoc) {
        RatVec x = origin_;
        for (int i = 0; i < ld; ++i) x = vadd(x, vscale(t[i], dirBasis_[i]));
        verts.push_back(std::move(x));
    }
    return hull(std::move(verts), ambient_);
}

/// Dual face under the vertex/facet correspondence established by dual():
/// the vertices of the dual face are the dual vertices of the facets
/// containing f. dim f + dim f* = dim - 1 holds for proper faces.
inline Face dual_face(const Polytope& p, const Polytope& pDual, const Face& f) {
    if (!f.proper()) throw std::invalid_argument("dual_face: face is not proper");
    Face g = pDual.face_from_vertices(f.tightFacets);
    if (g.vertIdx != f.tightFacets) throw std::logic_error("dual_face: correspondence mismatch");
    if (g.dim + f.dim != p.dim() - 1) throw std::logic_error("dual_face: dimension complement violated");
    return g;
}

/// Every proper face of the polytope: the facet tight-sets closed under
/// union (face intersection), nonempty results only. Desk scale.
inline std::vector<Face> all_proper_faces(const Polytope& p) {
    auto verts_on = [&](const std::vector<int>& tight) {
        std::vector<int> out;
        for (std::size_t i = 0; i < p.vertices().size(); ++i) {
            bool all = true;
            for (int j : tight)
                if (dot(p.facets()[j].normal, p.vertices()[i]) != p.facets()[j].offset) { all = false; break; }
            if (all) out.push_back(static_cast<int>(i));
        }
        return out;
    };
    std::set<std::vector<int>> tightSets;
    for (std::size_t j = 0; j < p.facets().size(); ++j)
        tightSets.insert(p.face_from_vertices(verts_on({static_cast<int>(j)})).tightFacets);
    for (;;) {
        std::set<std::vector<int>> next = tightSets;
        for (const auto& a : tightSets)
            for (const auto& b : tightSets) {
                std::vector<int> uni;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
                auto verts = verts_on(uni);
                if (!verts.empty()) next.insert(p.face_from_vertices(verts).tightFacets);
            }
        if (next == tightSets) break;
        tightSets = std::move(next);
    }
    std::vector<Face> faces;
    for (const auto& t : tightSets) {
        Face f = p.face_from_vertices(verts_on(t));
        if (f.proper()) faces.push_back(f);
    }
    return faces;
}

enum class BaryStatus { interior, boundary, outside, offSpan };

struct BarycentricResult {
    bool ok = false;
    BaryStatus status = BaryStatus::outside;
    std::string reason;
    std::vector<Rat> kappa;  // strictly positive, sums to one
    Rat minCoeff;            // the maximized minimum coefficient

    /// The target lies in the (closed) hull of the generators.
    bool in_hull() const { return status == BaryStatus::interior || status == BaryStatus::boundary; }
};

/// Strictly positive affine coefficients kappa with sum 1 and
/// sum kappa_i * generators_i = target, chosen to maximize the minimum
/// coefficient. Fails when the target is outside the relative interior of
/// the generators' hull. Solved as an exact LP by basic-solution enumeration
/// after the substitution kappa = u + t * ones, u >= 0, t >= 0.
inline BarycentricResult barycentric_interior(const RatVec& target, const std::vector<RatVec>& generators) {
    BarycentricResult res;
    const int k = static_cast<int>(generators.size());
    if (k == 0) {
        res.status = BaryStatus::outside;
        res.reason = "no generators";
        return res;
    }
    const int m = static_cast<int>(target.size());
    RatMat eq;  // rows over variables (u_1..u_k, t)
    RatVec rhs;
    for (int c = 0; c < m; ++c) {
        RatVec row(k + 1);
        Rat gsum = 0;
        for (int i = 0; i < k; ++i) {
            row[i] = generators[i][c];
            gsum += generators[i][c];
        }
        row[k] = gsum;
        eq.push_back(std::move(row));
        rhs.push_back(target[c]);
    }
    {
        RatVec row(k + 1, Rat(1));
        row[k] = k;
        eq.push_back(std::move(row));
        rhs.push_back(Rat(1));
    }
    // Reduce to independent rows, detecting inconsistency.
    RatMat aug(eq.size());
    for (std::size_t i = 0; i < eq.size(); ++i) {
        aug[i] = eq[i];
        aug[i].push_back(rhs[i]);
    }
    std::vector<int> pivots = rref(aug);
    RatMat e2;
    RatVec r2;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        RatVec row(aug[i].begin(), aug[i].begin() + (k + 1));
        e2.push_back(std::move(row));
        r2.push_back(aug[i][k + 1]);
    }
    for (std::size_t i = pivots.size(); i < aug.size(); ++i)
        if (aug[i][k + 1] != 0) {
            res.status = BaryStatus::offSpan;
            res.reason = "target not in the affine span of the generators";
            return res;
        }

    const int q = static_cast<int>(e2.size());
    std::optional<Rat> bestT;
    RatVec bestZ;
    std::vector<int> comb(q);
    for (int i = 0; i < q; ++i) comb[i] = i;
    const int nv = k + 1;
    auto next_comb = [&]() {
        int i = q - 1;
        while (i >= 0 && comb[i] == nv - q + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        RatMat a(q, RatVec(q));
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) a[r][c] = e2[r][comb[c]];
        if (rank(a) != q) continue;
        auto sol = solve(a, r2);
        if (!sol) continue;
        RatVec z(nv, Rat(0));
        bool nonneg = true;
        for (int c = 0; c < q; ++c) {
            z[comb[c]] = (*sol)[c];
            if ((*sol)[c] < 0) { nonneg = false; break; }
        }
        if (!nonneg) continue;
        if (!bestT || z[k] > *bestT) {
            bestT = z[k];
            bestZ = z;
        }
    } while (next_comb());

    if (!bestT) {
        res.status = BaryStatus::outside;
        res.reason = "target outside the convex hull of the generators";
        return res;
    }
    if (*bestT <= 0) {
        res.status = BaryStatus::boundary;
        res.reason = "target on the boundary of the generators' hull";
        return res;
    }
    res.ok = true;
    res.status = BaryStatus::interior;
    res.minCoeff = *bestT;
    res.kappa.resize(k);
    for (int i = 0; i < k; ++i) res.kappa[i] = bestZ[i] + *bestT;
    return res;
}

}  // namespace haarlim
