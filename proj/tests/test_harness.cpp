#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "haarlim/fixtures.hpp"
#include "haarlim/harness.hpp"

using namespace haarlim;

namespace {

// Exhaustive oracle: scan all integer matrices with entries in a box.
long long oracle_count_sl2z(double T, MatrixNorm norm) {
    long long M = static_cast<long long>(std::ceil(T)) + 1;
    if (norm == MatrixNorm::adjointSup) M = static_cast<long long>(std::ceil(std::sqrt(T))) + 1;
    long long count = 0;
    for (long long a = -M; a <= M; ++a)
        for (long long b = -M; b <= M; ++b)
            for (long long c = -M; c <= M; ++c)
                for (long long d = -M; d <= M; ++d) {
                    if (a * d - b * c != 1) continue;
                    double n;
                    switch (norm) {
                        case MatrixNorm::frobenius:
                            n = std::sqrt(static_cast<double>(a * a + b * b + c * c + d * d));
                            break;
                        case MatrixNorm::supEntry:
                            n = static_cast<double>(std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}));
                            break;
                        default:
                            n = static_cast<double>(detail::ad_sup_norm(a, b, c, d));
                            break;
                    }
                    if (n <= T) ++count;
                }
    return count;
}

}  // namespace

TEST_CASE("rank-one ball volume has a closed form") {
    // integral of 2 sinh(2t) over [0, ln T] = cosh(2 ln T) - 1
    auto rep = standard_rep(2);
    HaarQuadrature q(rep);
    for (double T : {10.0, 100.0}) {
        double exact = std::cosh(2 * std::log(T)) - 1;
        double num = q.volume(T, 20000);
        REQUIRE(std::abs(num - exact) <= 1e-6 * exact);
    }
    REQUIRE_THROWS_AS(q.volume(0.5, 100), std::invalid_argument);
}

TEST_CASE("ball volume is monotone and refines to a limit") {
    auto rep = std_plus_dual_rep();
    HaarQuadrature q(rep);
    double v1 = q.volume(20, 300), v2 = q.volume(40, 300), v3 = q.volume(80, 300);
    REQUIRE(v1 < v2);
    REQUIRE(v2 < v3);
    // Cauchy under refinement
    double a = q.volume(50, 200), b = q.volume(50, 400), c = q.volume(50, 800);
    REQUIRE(std::abs(b - c) < std::abs(a - c) + 1e-9 * std::abs(c));
    REQUIRE(std::abs(b - c) <= 5e-3 * std::abs(c));
}

TEST_CASE("ball volume ratio matches the homogeneity degree") {
    // rank one standard: degree 2, so vol(2T)/vol(T) -> 4
    auto rep = standard_rep(2);
    HaarQuadrature q(rep);
    double ratio = q.volume(2000, 50000) / q.volume(1000, 50000);
    REQUIRE(ratio > 3.96);
    REQUIRE(ratio < 4.04);
}

TEST_CASE("fit recovers synthetic growth laws") {
    CountSeries pure;
    pure.kind = SeriesKind::haarVolume;
    for (int i = 0; i < 12; ++i) {
        double T = 10.0 * std::pow(10.0, i / 4.0);
        pure.rows.push_back({T, 7.0 * T * T * T});
    }
    auto fit = fit_growth(pure, 3);
    REQUIRE(fit.eHat == 0);
    REQUIRE(std::abs(fit.dHat - 3.0) < 1e-6);
    REQUIRE(std::abs(fit.constantHat - 7.0) < 1e-4);

    CountSeries logged;
    for (int i = 0; i < 12; ++i) {
        double T = 100.0 * std::pow(10.0, i / 4.0);
        logged.rows.push_back({T, T * T * std::log(T)});
    }
    auto fit2 = fit_growth(logged, 3);
    REQUIRE(fit2.eHat == 1);
    REQUIRE(std::abs(fit2.dHat - 2.0) < 0.02);

    CountSeries tiny;
    tiny.rows = {{10, 1}, {20, 2}};
    REQUIRE_THROWS_AS(fit_growth(tiny, 2), std::invalid_argument);
}

TEST_CASE("haar volume series recovers the exact exponents") {
    // adjoint sl3: d = 2 with one logarithmic factor. The exact volume is
    // T^2 (ln T / 2 - 3/4) + O(ln T), so the windowed least-squares slope
    // sits near 2.045 for T <= 1e4 and only approaches 2 as T grows.
    auto series = haar_volume_series(adjoint_rep(3), 100, 10000, 17, 700);
    auto fit = fit_growth(series, 2);
    REQUIRE(fit.eHat == 1);
    REQUIRE(std::abs(fit.dHat - 2.0) < 0.06);
    // restricted to the top decade the secondary term fades
    auto top = fit_growth(series, 2, 1000, 10000);
    REQUIRE(top.eHat == 1);
    REQUIRE(std::abs(top.dHat - 2.0) < 0.04);
}

TEST_CASE("sl2z counts match the exhaustive oracle") {
    for (double T : {0.5, 1.0, std::sqrt(2.0), 2.0, 3.0, 5.0, 7.5, 10.0, 12.0})
        REQUIRE(count_sl2z(T, MatrixNorm::frobenius) == oracle_count_sl2z(T, MatrixNorm::frobenius));
    for (double T : {1.0, 2.0, 3.5, 6.0, 9.0})
        REQUIRE(count_sl2z(T, MatrixNorm::supEntry) == oracle_count_sl2z(T, MatrixNorm::supEntry));
    for (double T : {1.0, 3.0, 8.0, 20.0})
        REQUIRE(count_sl2z(T, MatrixNorm::adjointSup) == oracle_count_sl2z(T, MatrixNorm::adjointSup));

    REQUIRE(count_sl2z(std::sqrt(2.0), MatrixNorm::frobenius) == 4);
    REQUIRE(count_sl2z(2.0, MatrixNorm::frobenius) == 20);
    REQUIRE(count_sl2z(0.5, MatrixNorm::frobenius) == 0);
}

TEST_CASE("sl2z counting enumerator agrees with its visitor") {
    long long visited = 0;
    for_each_sl2z_sup(6, [&](long long a, long long b, long long c, long long d) {
        REQUIRE(a * d - b * c == 1);
        REQUIRE(std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) <= 6);
        ++visited;
    });
    REQUIRE(visited == count_sl2z(6.0, MatrixNorm::supEntry));
}

TEST_CASE("lattice count growth has slope two") {
    auto series = lattice_count_series(50, 800, 10, MatrixNorm::frobenius);
    // series rows are strictly increasing in T with nondecreasing counts
    for (std::size_t i = 1; i < series.rows.size(); ++i) {
        REQUIRE(series.rows[i].first > series.rows[i - 1].first);
        REQUIRE(series.rows[i].second >= series.rows[i - 1].second);
    }
    auto fit = fit_growth(series, 1, 50, 800);
    REQUIRE(fit.eHat == 0);
    REQUIRE(std::abs(fit.dHat - 2.0) < 0.05);
}

TEST_CASE("product count stabilizes quadratically") {
    REQUIRE(count_product_sl2z(0.5) == 0);
    // the identity pair already has product norm 1 * 1 = 1
    REQUIRE(count_product_sl2z(1.0) > 0);
    double c250 = static_cast<double>(count_product_sl2z(250)) / (250.0 * 250.0);
    double c500 = static_cast<double>(count_product_sl2z(500)) / (500.0 * 500.0);
    REQUIRE(std::abs(c500 - c250) / c500 < 0.10);
    // adjoint-norm shell sums 1/|g|^2 converge: the last octave adds little
    double partial100 = 0, partial200 = 0;
    for_each_sl2z_sup(16, [&](long long a, long long b, long long c, long long d) {
        double n = static_cast<double>(detail::ad_sup_norm(a, b, c, d));
        if (n <= 100) partial100 += 1.0 / (n * n);
        if (n <= 200) partial200 += 1.0 / (n * n);
    });
    REQUIRE((partial200 - partial100) / partial200 < 0.05);
}

TEST_CASE("orbit limit density") {
    // closed-form normalization
    REQUIRE(std::abs(orbit_density_integral(1.0, 4000) - 1.0) < 1e-4);
    // vanishing at the rim and outside
    REQUIRE(orbit_limit_density({1, 0}, {0.999999, 0}) < 1e-2);
    REQUIRE(orbit_limit_density({1, 0}, {1.5, 0}) == 0.0);
    REQUIRE(orbit_limit_density({1, 0}, {0, 0}) == 0.0);
    // scaling: density_{cv}(cy) * c^2 = density_v(y)
    for (double cscale : {2.0, 5.0}) {
        double lhs = orbit_limit_density({cscale, 0}, {0.3 * cscale, 0.2 * cscale}) * cscale * cscale;
        double rhs = orbit_limit_density({1, 0}, {0.3, 0.2});
        REQUIRE(lhs == Catch::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("orbit distribution approaches the limit density") {
    auto h = orbit_distribution({1.0, 0.0}, 200, 16);
    REQUIRE(h.count == count_sl2z(200, MatrixNorm::frobenius));
    REQUIRE(h.tvDistance < 0.08);
    REQUIRE(h.maxRadiusRatio <= 1.0 + 10.0 / 200.0);
    double totalEmp = 0, totalPred = 0;
    for (const auto& row : h.rows) {
        totalEmp += row.empirical;
        totalPred += row.predicted;
    }
    REQUIRE(totalEmp == Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(totalPred == Catch::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("orbit distribution is rotation equivariant") {
    auto h1 = orbit_distribution({1.0, 0.0}, 120, 8);
    auto h2 = orbit_distribution({0.0, 1.0}, 120, 8);  // v rotated by a quarter turn
    // radial marginals agree exactly (rotation permutes angular bins only)
    for (int ri = 0; ri < 8; ++ri) {
        double m1 = 0, m2 = 0;
        for (int ti = 0; ti < 8; ++ti) {
            m1 += h1.rows[ri * 8 + ti].empirical;
            m2 += h2.rows[ri * 8 + ti].empirical;
        }
        REQUIRE(m1 == Catch::Approx(m2).margin(0.02));
    }
}
