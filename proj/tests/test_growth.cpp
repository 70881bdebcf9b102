#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "haarlim/fixtures.hpp"
#include "haarlim/growth.hpp"

using namespace haarlim;

TEST_CASE("growth exponents of the worked examples") {
    for (int n : {2, 3, 4, 5, 6}) {
        auto rpt = analyze(standard_rep(n));
        REQUIRE(rpt.d == Rat(n * (n - 1)));
        REQUIRE(rpt.e == 0);
    }
    auto adj = analyze(adjoint_rep(3));
    REQUIRE(adj.d == 2);
    REQUIRE(adj.e == 1);

    auto hex = analyze(std_plus_dual_rep());
    REQUIRE(hex.d == 4);
    REQUIRE(hex.e == 0);

    auto prod = analyze(product_counterexample_rep());
    REQUIRE(prod.d == 2);
    REQUIRE(prod.e == 0);
    REQUIRE_FALSE(prod.normalGrowthStrict);
}

TEST_CASE("analyze rejects invalid representations") {
    auto rs = sl(3);
    auto thin = make_rep(rs, {rs->lambda(0, 0), -rs->lambda(0, 0)});
    REQUIRE_THROWS_AS(analyze(thin), std::invalid_argument);
}

TEST_CASE("the scaled density exponent reaches the hull boundary") {
    std::mt19937_64 rng(7);
    std::vector<Representation> reps = {standard_rep(3), std_plus_dual_rep(), adjoint_rep(3),
                                        product_counterexample_rep()};
    for (int t = 0; t < 20; ++t) reps.push_back(random_representation(rng));
    for (const auto& rep : reps) {
        auto rpt = analyze(rep);
        REQUIRE(rpt.d > 0);
        RatVec pt = vscale(Rat(1) / rpt.d, rep.rs->beta.coords);
        REQUIRE(rpt.C.contains(pt));
        REQUIRE_FALSE(rpt.C.strictly_contains(pt));
        // e three ways: dual-face dimension, codimension complement, argmax face
        REQUIRE(rpt.e == rpt.faceBetaDual.dim);
        REQUIRE(rpt.e == (rep.rs->rank() - 1) - rpt.faceBeta.dim);
        auto [dmax, argmax] = rpt.Cdual.lp_max(rep.rs->beta.coords);
        REQUIRE(dmax == rpt.d);
        REQUIRE(argmax.dim == rpt.e);
        REQUIRE(rpt.e >= 0);
        REQUIRE(rpt.e <= rep.rs->rank() - 1);
        // the dual growth face stays in the chamber
        REQUIRE(rpt.chamberOK);
    }
}

TEST_CASE("normal subgroup growth comparison") {
    REQUIRE(analyze(standard_rep(3)).normalGrowthStrict);
    REQUIRE(analyze(std_plus_dual_rep()).normalGrowthStrict);
    auto prod = analyze(product_counterexample_rep());
    REQUIRE_FALSE(prod.normalGrowthStrict);
    // lexicographic domination of the factor growths, equality in factor one
    auto r1 = analyze(restrict_to_factor(prod.rep, 0));
    auto r2 = analyze(restrict_to_factor(prod.rep, 1));
    REQUIRE(r1.d == 2);
    REQUIRE(r1.e == 0);
    REQUIRE(r2.d == 1);
    REQUIRE(std::make_pair(prod.d, prod.e) >= std::make_pair(r1.d, r1.e));
    REQUIRE(std::make_pair(prod.d, prod.e) >= std::make_pair(r2.d, r2.e));
}

TEST_CASE("product growth dominates factor growth") {
    std::mt19937_64 rng(808);
    int seen = 0;
    while (seen < 8) {
        auto rep = random_representation(rng);
        if (rep.rs->factors.size() < 2) continue;
        ++seen;
        auto rpt = analyze(rep);
        for (std::size_t f = 0; f < rep.rs->factors.size(); ++f) {
            auto sub = analyze(restrict_to_factor(rep, f));
            REQUIRE(std::make_pair(rpt.d, rpt.e) >= std::make_pair(sub.d, sub.e));
        }
    }
}

TEST_CASE("Weyl-dominated forms scale into the hull") {
    std::mt19937_64 rng(606);
    for (const auto& rep : {standard_rep(3), std_plus_dual_rep(), adjoint_rep(3)}) {
        auto rpt = analyze(rep);
        auto orbit = weyl_orbit(*rep.rs, rep.rs->beta);
        std::vector<Weight> pts(orbit.begin(), orbit.end());
        for (int t = 0; t < 25; ++t) {
            // random rational convex combination of orbit points
            RatVec g(rep.rs->ambient(), Rat(0));
            Rat total = 0;
            std::vector<Rat> cs;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                Rat c(static_cast<long>(rng() % 5), 1);
                cs.push_back(c);
                total += c;
            }
            if (total == 0) continue;
            for (std::size_t i = 0; i < pts.size(); ++i) g = vadd(g, vscale(cs[i] / total, pts[i].coords));
            REQUIRE(rpt.C.contains(vscale(Rat(1) / rpt.d, g)));
        }
    }
}

TEST_CASE("frame of the standard representation") {
    for (int n : {3, 4, 5}) {
        auto rpt = analyze(standard_rep(n));
        const auto& fr = rpt.frame;
        REQUIRE(fr.s == n - 2);
        REQUIRE(static_cast<int>(fr.basisIdx.size()) == n - 1);
        // tau_i = 2(n - i) - 1 after matching basis weights to lambda order
        std::vector<Rat> expect;
        for (int i = 1; i <= n - 1; ++i) expect.push_back(Rat(2 * (n - i) - 1));
        std::vector<Rat> got = fr.tauExp;
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        REQUIRE(got == expect);
        // the only nonzero constant form is the last weight's, with value -n
        int nonzero = 0;
        for (const auto& f : fr.weightForms) {
            REQUIRE(f.is_constant());
            if (f.constant != 0) {
                ++nonzero;
                REQUIRE(f.constant == Rat(-n));
            }
        }
        REQUIRE(nonzero == 1);
        REQUIRE(rpt.consts.lambda == Rat(1, n));
        // the two-ratio constants, evaluated literally
        REQUIRE(rpt.consts.tau == 2);
        REQUIRE(rpt.consts.xi.has_value());
        REQUIRE(*rpt.consts.xi == Rat(2 * n, n - 1));

        // annotated fixture: replacing tau_j + 1 by tau_j in the two ratios
        // gives the printed small-rank variants (2n-3)/(n-1) and n/(n-1);
        // the implementation deliberately uses tau_j + 1
        std::optional<Rat> tauVar, xiVar;
        for (std::size_t i = 0; i < fr.weightForms.size(); ++i) {
            const auto& wf = fr.weightForms[i];
            if (!wf.is_constant() || wf.constant == 0) continue;
            for (int j = 0; j <= fr.s; ++j) {
                const Rat& p = fr.pairings[i][j];
                if (p >= 0) continue;
                Rat tc = -fr.tauExp[j] / (Rat(fr.s + 1) * p);
                Rat xc = wf.constant * fr.tauExp[j] / (Rat(fr.s + 1) * p);
                if (!tauVar || tc > *tauVar) tauVar = tc;
                if (!xiVar || xc < *xiVar) xiVar = xc;
            }
        }
        REQUIRE(tauVar == Rat(2 * n - 3, n - 1));
        REQUIRE(xiVar == Rat(n, n - 1));
    }
}

TEST_CASE("frame of the hexagon representation") {
    auto rpt = analyze(std_plus_dual_rep());
    const auto& fr = rpt.frame;
    auto rs = rpt.rep.rs;
    REQUIRE(fr.s == 1);
    // basis: chi_1 = lambda_1, chi_2 = -lambda_3; kappa = (1/2, 1/2)
    REQUIRE(fr.tauExp == std::vector<Rat>{Rat(1), Rat(1)});
    // the four off-basis weights have constant forms -1, -2, -2, -1
    std::multiset<Rat> consts;
    for (const auto& f : fr.weightForms) {
        REQUIRE(f.is_constant());
        consts.insert(f.constant);
    }
    REQUIRE(consts == std::multiset<Rat>{Rat(0), Rat(0), Rat(-1), Rat(-1), Rat(-2), Rat(-2)});
    REQUIRE(rpt.consts.lambda == 1);
    REQUIRE(rpt.consts.tau == 1);
    REQUIRE(*rpt.consts.xi == 1);
}

TEST_CASE("frame structural invariants") {
    std::mt19937_64 rng(4242);
    std::vector<Representation> reps = {standard_rep(3), standard_rep(4), std_plus_dual_rep(), adjoint_rep(3),
                                        product_counterexample_rep()};
    for (int t = 0; t < 25; ++t) reps.push_back(random_representation(rng));
    for (const auto& rep : reps) {
        auto rpt = analyze(rep);
        const auto& fr = rpt.frame;
        // mu rows sum to one
        for (const auto& row : fr.mu) {
            Rat s = 0;
            for (const auto& x : row) s += x;
            REQUIRE(s == 1);
        }
        // integrability exponents stay above -1
        for (const auto& tj : fr.tauExp) REQUIRE(tj > -1);
        // kappa strictly positive and summing to one
        Rat ks = 0;
        for (const auto& k : fr.kappa) {
            REQUIRE(k > 0);
            ks += k;
        }
        REQUIRE(ks == 1);
        // the dual-basis sum lies in the dual body
        RatVec sum(rep.rs->ambient(), Rat(0));
        for (const auto& y : fr.dualBasis) sum = vadd(sum, y.coords);
        REQUIRE(rpt.Cdual.contains(sum));
        // pairing matrix is dual on the basis block
        for (std::size_t i = 0; i < fr.basisIdx.size(); ++i)
            for (std::size_t j = 0; j < fr.basisIdx.size(); ++j)
                REQUIRE(fr.pairings[fr.basisIdx[i]][j] == (i == j ? 1 : 0));
        // constants sanity
        REQUIRE(rpt.consts.lambda >= 0);
        REQUIRE(rpt.consts.tau >= 0);
        if (rpt.consts.xi) REQUIRE(*rpt.consts.xi > 0);
    }
}

TEST_CASE("secondary term exponent") {
    // hexagon: d - 3 = 1
    auto hex = analyze(std_plus_dual_rep());
    REQUIRE(hex.consts.xiPrimeSup.has_value());
    REQUIRE(*hex.consts.xiPrimeSup == 1);
    // standard sl(n): strict bound n
    for (int n : {2, 3, 4}) {
        auto rpt = analyze(standard_rep(n));
        REQUIRE(*rpt.consts.xiPrimeSup == Rat(n));
    }
    // rank one: the only off-face exponent is -beta, whose chamber max is 0
    auto r1 = analyze(standard_rep(2));
    REQUIRE(r1.omega.omega2 == std::vector<Weight>{-r1.rep.rs->beta});
    REQUIRE(*r1.consts.xiPrimeSup == 2);
}

TEST_CASE("chamber maxima of linear forms") {
    auto rpt = analyze(std_plus_dual_rep());
    REQUIRE(max_over_delta(rpt.Delta, rpt.rep.rs->beta) == rpt.d);
    REQUIRE(max_over_delta(rpt.Delta, -rpt.rep.rs->beta) == 0);
}

TEST_CASE("chamber slice of the hexagon dual") {
    // Delta has the four extreme points 0, x1, x2, x3 with lambda-pairings
    // (0,0,0), (1/2,1/2,-1), (1,-1/2,-1/2), (1,0,-1)
    auto rpt = analyze(std_plus_dual_rep());
    auto rs = rpt.rep.rs;
    REQUIRE(rpt.Delta.vertices().size() == 4);
    std::set<std::vector<Rat>> pairings;
    for (const auto& v : rpt.Delta.vertices()) {
        std::vector<Rat> p;
        for (int i = 0; i < 3; ++i) p.push_back(pairing(rs->lambda(0, i), v));
        pairings.insert(p);
    }
    std::set<std::vector<Rat>> expected = {{Rat(0), Rat(0), Rat(0)},
                                           {Rat(1, 2), Rat(1, 2), Rat(-1)},
                                           {Rat(1), Rat(-1, 2), Rat(-1, 2)},
                                           {Rat(1), Rat(0), Rat(-1)}};
    REQUIRE(pairings == expected);
}

TEST_CASE("empty-set conventions for the constants") {
    // no constant strictly negative form: lambda falls back to zero,
    // the pair set is empty, tau falls back to zero and xi is unconstrained
    Frame fr;
    fr.s = 0;
    fr.tauExp = {Rat(1)};
    fr.pairings = {{Rat(1)}, {Rat(2)}};
    fr.weightForms.push_back({Rat(0), {}});
    fr.weightForms.push_back({Rat(-1), {Rat(1)}});  // negative but not constant
    REQUIRE(lambda_const(fr) == 0);
    auto [tau, xi] = tau_xi(fr);
    REQUIRE(tau == 0);
    REQUIRE_FALSE(xi.has_value());

    // no secondary term: the exponent supremum is reported as absent
    auto rpt = analyze(std_plus_dual_rep());
    REQUIRE_FALSE(xi_prime_sup(rpt.Delta, rpt.d, {}).has_value());
}

TEST_CASE("lattice remainder exponents") {
    // sl3 fixtures
    auto hex = analyze(std_plus_dual_rep());
    REQUIRE(hex.mMin == 1);
    REQUIRE(hex.tau1Formula == 20);
    REQUIRE(hex.tau1Table == 17);
    REQUIRE(hex.xi1Sup.has_value());
    REQUIRE(*hex.xi1Sup == 1);

    for (auto [n, m, t1] : {std::tuple<int, int, long>{3, 1, 20}, {4, 2, 38}, {6, 4, 86}}) {
        auto rpt = analyze(standard_rep(n));
        REQUIRE(rpt.mMin == m);
        REQUIRE(rpt.tau1Formula == t1);
        // the half-sum bound keeps xi_1 at least n/2
        REQUIRE(*rpt.xi1Sup >= Rat(n, 2));
    }

    // rank-one and product systems do not carry the exponent
    REQUIRE_FALSE(analyze(standard_rep(2)).mMin.has_value());
    REQUIRE_FALSE(analyze(product_counterexample_rep()).xi1Sup.has_value());
}

TEST_CASE("remainder exponent alpha0") {
    auto hex = analyze(std_plus_dual_rep());
    auto a = alpha0(hex.consts, hex.e, Rat(1));
    REQUIRE(a.v == Rat(1, 2));
    REQUIRE(a.alpha0 == Rat(1, 2));
    // also recorded on the report at alpha = 1
    REQUIRE(hex.consts.alpha0V == Rat(1, 2));
    REQUIRE(hex.consts.alpha0 == Rat(1, 2));

    // alpha -> 0 limit approaches min(1/lambda, xi/tau) from below
    auto small = alpha0(hex.consts, hex.e, Rat(1, 1000));
    REQUIRE(*small.v > Rat(99, 100));
    REQUIRE(*small.v < 1);

    // standard sl3 with the literal two-ratio constants
    auto s3 = analyze(standard_rep(3));
    auto b = alpha0(s3.consts, s3.e, Rat(1));
    REQUIRE(b.alpha0.has_value());
    REQUIRE(*b.alpha0 > 0);
    REQUIRE(*b.v == 1);
    REQUIRE(*b.alpha0 == 1);

    // defined only for e = 0
    auto adj = analyze(adjoint_rep(3));
    REQUIRE_THROWS_AS(alpha0(adj.consts, adj.e, Rat(1)), std::invalid_argument);
}

TEST_CASE("frame optimization never worsens xi") {
    for (const auto& rep : {standard_rep(3), std_plus_dual_rep(), adjoint_rep(3)}) {
        auto base = analyze(rep);
        AnalyzeOptions opts;
        opts.optimizeFrame = true;
        auto tuned = analyze(rep, opts);
        if (base.consts.xi && tuned.consts.xi) REQUIRE(*tuned.consts.xi >= *base.consts.xi);
    }
}
