#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "haarlim/fixtures.hpp"
#include "haarlim/repspace.hpp"

using namespace haarlim;

namespace {

bool multiset_eq(const Representation& a, const Representation& b) { return a.weights == b.weights; }

}  // namespace

TEST_CASE("standard representation") {
    auto rep = standard_rep(3);
    REQUIRE(rep.dim_v() == 3);
    for (int i = 0; i < 3; ++i) REQUIRE(rep.weights.at(rep.rs->lambda(0, i)) == 1);

    auto rep2 = standard_rep(2);
    REQUIRE(rep2.weights.count(rep2.rs->lambda(0, 0)) == 1);
    REQUIRE(rep2.weights.count(-rep2.rs->lambda(0, 0)) == 1);

    auto rep4 = standard_rep(4);
    RatMat span;
    for (const auto& [w, m] : rep4.weights) span.push_back(w.coords);
    REQUIRE(rank(std::move(span)) == 3);

    auto prod = std::make_shared<const RootSystem>(build_product(build_type_A(2), build_type_A(2)));
    REQUIRE_THROWS_AS(standard(prod), std::invalid_argument);
}

TEST_CASE("dual negates the weight multiset") {
    auto rep = standard_rep(3);
    auto d = dual(rep);
    for (int i = 0; i < 3; ++i) REQUIRE(d.weights.at(-rep.rs->lambda(0, i)) == 1);
    REQUIRE(multiset_eq(dual(d), rep));
    // the adjoint weight set is symmetric
    auto adj = adjoint_rep(3);
    REQUIRE(multiset_eq(dual(adj), adj));
}

TEST_CASE("adjoint representation") {
    auto adj = adjoint_rep(3);
    REQUIRE(adj.dim_v() == 8);
    REQUIRE(adj.weights.size() == 7);  // six roots plus 0 with multiplicity 2
    REQUIRE(adj.weights.at(Weight{RatVec(3, Rat(0))}) == 2);

    auto a1 = adjoint_rep(2);
    REQUIRE(a1.dim_v() == 3);
    REQUIRE(validate(adjoint_rep(4)).ok());
}

TEST_CASE("direct sums") {
    auto rep = std_plus_dual_rep();
    REQUIRE(rep.dim_v() == 6);
    REQUIRE(rep.weights.size() == 6);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(rep.weights.at(rep.rs->lambda(0, i)) == 1);
        REQUIRE(rep.weights.at(-rep.rs->lambda(0, i)) == 1);
    }
    auto s = standard_rep(3);
    auto withTrivial = direct_sum(s, trivial(s.rs));
    REQUIRE(withTrivial.dim_v() == 4);
    REQUIRE(withTrivial.weights.at(Weight{RatVec(3, Rat(0))}) == 1);

    auto other = standard_rep(4);
    REQUIRE_THROWS_AS(direct_sum(s, other), std::invalid_argument);
}

TEST_CASE("tensor products") {
    auto s = standard_rep(2);
    auto t = tensor(s, s);
    REQUIRE(t.dim_v() == 4);
    Weight two = Rat(2) * s.rs->lambda(0, 0);
    REQUIRE(t.weights.at(two) == 1);
    REQUIRE(t.weights.at(-two) == 1);
    REQUIRE(t.weights.at(Weight{RatVec(2, Rat(0))}) == 2);

    REQUIRE(multiset_eq(tensor(s, trivial(s.rs)), s));

    auto a = adjoint_rep(3);
    REQUIRE(tensor(a, standard_rep(3)).dim_v() == a.dim_v() * 3);
}

TEST_CASE("external tensor product") {
    auto rep = product_counterexample_rep();
    REQUIRE(rep.rs->factors == std::vector<int>{2, 2});
    REQUIRE(rep.dim_v() == 6);
    REQUIRE(rep.weights.size() == 6);
    REQUIRE(validate(rep).ok());
    // weights are +-alpha_1/2 + {alpha_2, 0, -alpha_2}; pairings with beta
    // take the values eps + 2c, eps = +-1, c in {-1, 0, 1}
    Weight b = rep.rs->beta;
    std::set<Rat> vals;
    for (const auto& [w, m] : rep.weights) vals.insert(pairing(w, ChamberVector{b.coords}));
    REQUIRE(vals == std::set<Rat>{Rat(-3), Rat(-1), Rat(1), Rat(3)});

    auto s = standard_rep(3);
    auto lifted = external_tensor(trivial(sl(2)), s);
    REQUIRE(lifted.dim_v() == 3);
    for (const auto& [w, m] : lifted.weights) {
        REQUIRE(w.coords[0] == 0);
        REQUIRE(w.coords[1] == 0);
    }
}

TEST_CASE("validation diagnostics") {
    REQUIRE(validate(standard_rep(3)).ok());

    // span failure: only +-lambda_1 over sl3
    auto rs = sl(3);
    auto thin = make_rep(rs, {rs->lambda(0, 0), -rs->lambda(0, 0)});
    auto d1 = validate(thin);
    REQUIRE(d1.sumZero);
    REQUIRE_FALSE(d1.fullSpan);
    REQUIRE_FALSE(d1.ok());

    // sum-zero failure: shifted weights
    Weight shift = rs->lambda(0, 0);
    auto shifted = make_rep(rs, {rs->lambda(0, 0) + shift, rs->lambda(0, 1) + shift, rs->lambda(0, 2) + shift});
    auto d2 = validate(shifted);
    REQUIRE_FALSE(d2.sumZero);
    REQUIRE_FALSE(d2.failure().empty());
}

TEST_CASE("every constructor output sums to zero") {
    std::mt19937_64 rng(314);
    for (int t = 0; t < 40; ++t) {
        auto rep = random_representation(rng);
        RatVec sum(rep.rs->ambient(), Rat(0));
        for (const auto& [w, m] : rep.weights) sum = vadd(sum, vscale(Rat(m), w.coords));
        REQUIRE(is_zero(sum));
    }
}

TEST_CASE("weight multisets are Weyl invariant") {
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 25; ++t) {
        auto rep = random_representation(rng);
        const auto& rs = *rep.rs;
        for (std::size_t b = 0; b + 1 < rs.blockStart.size(); ++b)
            for (int i = rs.blockStart[b]; i + 1 < rs.blockStart[b + 1]; ++i) {
                std::map<Weight, int> permuted;
                for (const auto& [w, m] : rep.weights) {
                    RatVec v = w.coords;
                    std::swap(v[i], v[i + 1]);
                    permuted[Weight{std::move(v)}] += m;
                }
                REQUIRE(permuted == rep.weights);
            }
    }
}

TEST_CASE("direct_sum is commutative and associative") {
    auto a = standard_rep(3);
    auto b = dual(standard_rep(3));
    auto c = adjoint_rep(3);
    REQUIRE(multiset_eq(direct_sum(a, b), direct_sum(b, a)));
    REQUIRE(multiset_eq(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c))));
}

TEST_CASE("restriction to a factor") {
    auto rep = product_counterexample_rep();
    auto r1 = restrict_to_factor(rep, 0);
    REQUIRE(r1.rs->factors == std::vector<int>{2});
    REQUIRE(r1.dim_v() == 6);
    // three copies each of +-alpha_1/2
    REQUIRE(r1.weights.size() == 2);
    for (const auto& [w, m] : r1.weights) REQUIRE(m == 3);
    auto r2 = restrict_to_factor(rep, 1);
    REQUIRE(r2.weights.size() == 3);  // alpha_2, 0, -alpha_2 twice each
}
