// Floating-point verification of the exact predictions: ball-volume
// quadrature against the Cartan density, growth-law regression, exact
// SL(2,Z) lattice counts under several norms, the product-lattice count, and
// the planar orbit-distribution experiment.
#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "haarlim/growth.hpp"

namespace haarlim {

enum class SeriesKind { latticeCount, haarVolume };

struct CountSeries {
    SeriesKind kind = SeriesKind::haarVolume;
    std::string label;
    std::vector<std::pair<double, double>> rows;  // (T, value), T strictly increasing
};

struct FitResult {
    double dHat = 0;
    int eHat = 0;
    double constantHat = 0;  // multiplicative constant exp(intercept)
    double residual = 0;     // RMS of log deviations over the window
    double tMin = 0, tMax = 0;
};

// ---------------------------------------------------------------------------
// Haar-ball quadrature
// ---------------------------------------------------------------------------

/// Precomputed data for integrating the Cartan density over scaled copies of
/// Delta. Works in the per-block difference basis e_k - e_{k+1}, in which the
/// Lebesgue normalization da = dt makes the rank-one ball volume match
/// cosh(2 ln T) - 1 exactly.
class HaarQuadrature {
  public:
    explicit HaarQuadrature(const Representation& rep) {
        const RootSystem& rs = *rep.rs;
        r_ = rs.rank();
        // block difference basis
        std::vector<RatVec> basis;
        for (std::size_t b = 0; b + 1 < rs.blockStart.size(); ++b)
            for (int i = rs.blockStart[b]; i + 1 < rs.blockStart[b + 1]; ++i) {
                RatVec v(rs.ambient(), Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                basis.push_back(std::move(v));
            }
        auto toLocalForm = [&](const RatVec& w) {
            std::vector<double> f(r_);
            for (int i = 0; i < r_; ++i) f[i] = to_double(dot(w, basis[i]));
            return f;
        };
        for (const auto& [w, m] : rep.weights) weightForms_.push_back(toLocalForm(w.coords));
        for (const auto& [alpha, m] : rs.positiveRoots) rootForms_.push_back({toLocalForm(alpha.coords), m});
        for (const auto& alpha : rs.simpleRoots) chamberForms_.push_back(toLocalForm(alpha.coords));

        // bounding box of Delta in local coordinates (exact vertices,
        // coordinates by per-block partial sums)
        Polytope c = Polytope::hull(rep.distinct_points(), rs.ambient());
        Polytope delta = intersect_chamber(c.dual(), rs);
        lo_.assign(r_, 0.0);
        hi_.assign(r_, 0.0);
        for (const auto& v : delta.vertices()) {
            int k = 0;
            for (std::size_t b = 0; b + 1 < rs.blockStart.size(); ++b) {
                Rat partial = 0;
                for (int i = rs.blockStart[b]; i + 1 < rs.blockStart[b + 1]; ++i) {
                    partial += v[i];
                    double t = to_double(partial);
                    lo_[k] = std::min(lo_[k], t);
                    hi_[k] = std::max(hi_[k], t);
                    ++k;
                }
            }
        }
    }

    int rank() const { return r_; }

    /// Midpoint-rule integral of the density over {a in the closed chamber,
    /// max_i <chi_i | a> <= ln T}, on a resolution^rank grid over the scaled
    /// bounding box of Delta. Deterministic for fixed resolution.
    double volume(double T, int resolution) const {
        if (T <= 1) throw std::invalid_argument("haar volume: need T > 1");
        if (resolution < 2) throw std::invalid_argument("haar volume: resolution too small");
        const double L = std::log(T);
        std::vector<double> step(r_), base(r_);
        double cellVol = 1;
        for (int i = 0; i < r_; ++i) {
            step[i] = (hi_[i] - lo_[i]) * L / resolution;
            base[i] = lo_[i] * L + step[i] / 2;
            cellVol *= step[i];
        }
        double sum = 0;
        std::vector<int> idx(r_, 0);
        std::vector<double> t(r_);
        for (;;) {
            for (int i = 0; i < r_; ++i) t[i] = base[i] + idx[i] * step[i];
            sum += density_if_inside(t, L);
            int i = 0;
            while (i < r_ && ++idx[i] == resolution) idx[i++] = 0;
            if (i == r_) break;
        }
        return sum * cellVol;
    }

  private:
    double density_if_inside(const std::vector<double>& t, double L) const {
        for (const auto& f : chamberForms_) {
            double v = 0;
            for (int i = 0; i < r_; ++i) v += f[i] * t[i];
            if (v < 0) return 0;
        }
        for (const auto& f : weightForms_) {
            double v = 0;
            for (int i = 0; i < r_; ++i) v += f[i] * t[i];
            if (v > L) return 0;
        }
        double dens = 1;
        for (const auto& [f, m] : rootForms_) {
            double v = 0;
            for (int i = 0; i < r_; ++i) v += f[i] * t[i];
            double s = 2.0 * std::sinh(v);
            for (int k = 0; k < m; ++k) dens *= s;
        }
        return dens;
    }

    int r_;
    std::vector<std::vector<double>> weightForms_;
    std::vector<std::pair<std::vector<double>, int>> rootForms_;
    std::vector<std::vector<double>> chamberForms_;
    std::vector<double> lo_, hi_;
};

inline double haar_ball_volume(const Representation& rep, double T, int resolution) {
    return HaarQuadrature(rep).volume(T, resolution);
}

inline CountSeries haar_volume_series(const Representation& rep, double tMin, double tMax, int steps,
                                      int resolution, std::string label = "haar-volume") {
    if (steps < 2 || tMin <= 1 || tMax <= tMin) throw std::invalid_argument("haar_volume_series: bad range");
    HaarQuadrature q(rep);
    CountSeries s;
    s.kind = SeriesKind::haarVolume;
    s.label = std::move(label);
    for (int i = 0; i < steps; ++i) {
        double T = tMin * std::pow(tMax / tMin, static_cast<double>(i) / (steps - 1));
        s.rows.push_back({T, q.volume(T, resolution)});
    }
    return s;
}

// ---------------------------------------------------------------------------
// Growth-law regression
// ---------------------------------------------------------------------------

/// Least-squares fit of log(value) - e log log T against log T for each
/// candidate logarithmic order e in 0..r-1; the residual-minimizing e wins
/// (ties to the smaller e). Requires at least 8 rows spanning a decade.
inline FitResult fit_growth(const CountSeries& series, int r, double windowMin = -1, double windowMax = -1) {
    std::vector<std::pair<double, double>> rows;
    double tMax = 0;
    for (const auto& [t, v] : series.rows) tMax = std::max(tMax, t);
    if (windowMax <= 0) windowMax = tMax;
    if (windowMin <= 0) windowMin = windowMax / 100.0;
    for (const auto& [t, v] : series.rows)
        if (t >= windowMin && t <= windowMax && v > 0) rows.push_back({t, v});
    if (rows.size() < 8) throw std::invalid_argument("fit_growth: need at least 8 usable rows");
    double lo = rows.front().first, hi = rows.front().first;
    for (const auto& [t, v] : rows) {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    if (hi < 10 * lo) throw std::invalid_argument("fit_growth: window must span a decade");

    FitResult best;
    bool first = true;
    for (int e = 0; e < std::max(1, r); ++e) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(rows.size());
        for (const auto& [t, v] : rows) {
            double x = std::log(t);
            double y = std::log(v) - e * std::log(std::log(t));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double icept = (sy - slope * sx) / n;
        double ss = 0;
        for (const auto& [t, v] : rows) {
            double x = std::log(t);
            double y = std::log(v) - e * std::log(std::log(t));
            double dvi = y - (slope * x + icept);
            ss += dvi * dvi;
        }
        double rms = std::sqrt(ss / n);
        if (first || rms < best.residual) {
            best.dHat = slope;
            best.eHat = e;
            best.constantHat = std::exp(icept);
            best.residual = rms;
            first = false;
        }
    }
    best.tMin = lo;
    best.tMax = hi;
    return best;
}

// ---------------------------------------------------------------------------
// SL(2,Z) lattice counting
// ---------------------------------------------------------------------------

enum class MatrixNorm { frobenius, supEntry, adjointSup };

namespace detail {

inline long long gcdll(long long a, long long b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Extended gcd solution x*d - y*c = 1 for coprime (c, d).
inline std::pair<long long, long long> det_one_row(long long c, long long d) {
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;  // invariants over (d, c) Euclid steps
    long long a = d, b = c;
    while (b) {
        long long q = a / b;
        std::tie(a, b) = std::pair<long long, long long>(b, a - q * b);
        std::tie(x0, x1) = std::pair<long long, long long>(x1, x0 - q * x1);
        std::tie(y0, y1) = std::pair<long long, long long>(y1, y0 - q * y1);
    }
    // a = gcd = x0*d + y0*c = +-1
    if (a == 1) return {x0, -y0};
    return {-x0, y0};
}

/// sup-norm of the adjoint action in the basis (E, H, F) of traceless
/// matrices: the largest absolute entry of the 3x3 matrix of g X g^{-1}.
inline long long ad_sup_norm(long long a, long long b, long long c, long long d) {
    long long vals[] = {a * a, c * c, b * b, d * d, 2 * a * b, 2 * c * d, a * d + b * c, a * c, b * d};
    long long mx = 0;
    for (long long v : vals) mx = std::max(mx, std::abs(v));
    return mx;
}

/// Count integers t in [lo, hi] given a monotone-free exact predicate; lo/hi
/// come from floating point and are corrected by exact checks at the edges.
template <class Pred>
inline long long count_interval(double lo, double hi, Pred ok) {
    if (!(lo <= hi)) return 0;
    long long tlo = static_cast<long long>(std::ceil(lo));
    long long thi = static_cast<long long>(std::floor(hi));
    while (ok(tlo - 1)) --tlo;
    while (!ok(tlo) && tlo <= thi) ++tlo;
    while (ok(thi + 1)) ++thi;
    while (!ok(thi) && thi >= tlo) --thi;
    if (tlo > thi) return 0;
    return thi - tlo + 1;
}

}  // namespace detail

/// Exact number of integer matrices (a b; c d) with determinant one and the
/// chosen norm at most T. Enumerates coprime bottom rows; the compatible top
/// rows form the arithmetic progression (a0 + t c, b0 + t d).
inline long long count_sl2z(double T, MatrixNorm norm = MatrixNorm::frobenius) {
    if (T < 1) return 0;
    const double T2 = T * T;

    if (norm == MatrixNorm::adjointSup) {
        long long B = static_cast<long long>(std::floor(std::sqrt(T))) + 2;
        long long count = 0;
        for (long long c = -B; c <= B; ++c)
            for (long long d = -B; d <= B; ++d) {
                if ((c | d) == 0 || detail::gcdll(c, d) != 1) continue;
                auto [a0, b0] = detail::det_one_row(c, d);
                // all nine adjoint entries are quadratics in t; the dominant
                // ones force |a|,|b| <= sqrt(2T), giving a finite scan range
                double lim = std::sqrt(2.0 * T) + 3;
                double lo, hi;
                if (c != 0) {
                    lo = (-lim - a0) / c;
                    hi = (lim - a0) / c;
                } else {
                    lo = (-lim - b0) / d;
                    hi = (lim - b0) / d;
                }
                if (lo > hi) std::swap(lo, hi);
                for (long long t = static_cast<long long>(std::floor(lo)) - 1;
                     t <= static_cast<long long>(std::ceil(hi)) + 1; ++t) {
                    long long a = a0 + t * c, b = b0 + t * d;
                    if (static_cast<double>(detail::ad_sup_norm(a, b, c, d)) <= T) ++count;
                }
            }
        return count;
    }

    long long C = static_cast<long long>(std::floor(T));
    long long count = 0;
    for (long long c = -C; c <= C; ++c) {
        for (long long d = -C; d <= C; ++d) {
            if ((c | d) == 0 || detail::gcdll(c, d) != 1) continue;
            if (norm == MatrixNorm::frobenius && static_cast<double>(c * c + d * d) > T2) continue;
            auto [a0, b0] = detail::det_one_row(c, d);
            if (norm == MatrixNorm::frobenius) {
                // (a0+tc)^2 + (b0+td)^2 <= T^2 - c^2 - d^2
                double S = T2 - static_cast<double>(c * c + d * d);
                double A = static_cast<double>(c * c + d * d);
                double Bq = 2.0 * (static_cast<double>(a0) * c + static_cast<double>(b0) * d);
                double Cq = static_cast<double>(a0 * a0 + b0 * b0) - S;
                double disc = Bq * Bq - 4 * A * Cq;
                if (disc < 0) disc = 0;  // edge grazing; exact check recovers boundary hits
                double sq = std::sqrt(disc);
                auto ok = [&](long long t) {
                    long long a = a0 + t * c, b = b0 + t * d;
                    return static_cast<double>(a * a + b * b + c * c + d * d) <= T2;
                };
                count += detail::count_interval((-Bq - sq) / (2 * A), (-Bq + sq) / (2 * A), ok);
            } else {  // supEntry
                double lo = -std::numeric_limits<double>::infinity();
                double hi = std::numeric_limits<double>::infinity();
                bool feasible = true;
                auto clamp = [&](long long x0, long long m) {
                    if (m == 0) {
                        if (std::abs(x0) > T) feasible = false;
                        return;
                    }
                    double l = (-T - x0) / static_cast<double>(m);
                    double h = (T - x0) / static_cast<double>(m);
                    if (l > h) std::swap(l, h);
                    lo = std::max(lo, l);
                    hi = std::min(hi, h);
                };
                clamp(a0, c);
                clamp(b0, d);
                if (!feasible) continue;
                auto ok = [&](long long t) {
                    long long a = a0 + t * c, b = b0 + t * d;
                    return std::max(std::abs(a), std::abs(b)) <= static_cast<double>(T) &&
                           std::max(std::abs(c), std::abs(d)) <= static_cast<double>(T);
                };
                count += detail::count_interval(lo, hi, ok);
            }
        }
    }
    return count;
}

/// Visit every element of SL(2,Z) with sup-entry norm at most B.
template <class Fn>
inline void for_each_sl2z_sup(long long B, Fn fn) {
    for (long long c = -B; c <= B; ++c)
        for (long long d = -B; d <= B; ++d) {
            if ((c | d) == 0 || detail::gcdll(c, d) != 1) continue;
            auto [a0, b0] = detail::det_one_row(c, d);
            // |a0 + tc| <= B and |b0 + td| <= B
            double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
            bool feasible = true;
            auto clamp = [&](long long x0, long long m) {
                if (m == 0) {
                    if (std::abs(x0) > B) feasible = false;
                    return;
                }
                double l = (-static_cast<double>(B) - x0) / m, h = (static_cast<double>(B) - x0) / m;
                if (l > h) std::swap(l, h);
                lo = std::max(lo, l);
                hi = std::min(hi, h);
            };
            clamp(a0, c);
            clamp(b0, d);
            if (!feasible || lo > hi) continue;
            for (long long t = static_cast<long long>(std::ceil(lo)) - 1;
                 t <= static_cast<long long>(std::floor(hi)) + 1; ++t) {
                long long a = a0 + t * c, b = b0 + t * d;
                if (std::max(std::abs(a), std::abs(b)) <= B) fn(a, b, c, d);
            }
        }
}

/// Count pairs (g1, g2) in SL(2,Z)^2 with sup(g1) * adjointSup(g2) <= T,
/// the coefficient-sup norm of the pure tensor g1 (x) Ad(g2). Sums the inner
/// standard counts over g2, using integer thresholds throughout.
inline long long count_product_sl2z(double T) {
    if (T < 1) return 0;
    long long B = static_cast<long long>(std::floor(std::sqrt(T))) + 2;
    long long total = 0;
    for_each_sl2z_sup(B, [&](long long a, long long b, long long c, long long d) {
        long long nAd = detail::ad_sup_norm(a, b, c, d);
        if (static_cast<double>(nAd) > T) return;
        long long K = static_cast<long long>(T / static_cast<double>(nAd));
        while (static_cast<double>((K + 1) * nAd) <= T) ++K;
        while (K > 0 && static_cast<double>(K * nAd) > T) --K;
        if (K >= 1) total += count_sl2z(static_cast<double>(K), MatrixNorm::supEntry);
    });
    return total;
}

inline CountSeries lattice_count_series(double tMin, double tMax, int steps, MatrixNorm norm,
                                        std::string label = "lattice-count") {
    if (steps < 2 || tMin < 1 || tMax <= tMin) throw std::invalid_argument("lattice_count_series: bad range");
    CountSeries s;
    s.kind = SeriesKind::latticeCount;
    s.label = std::move(label);
    for (int i = 0; i < steps; ++i) {
        double T = tMin * std::pow(tMax / tMin, static_cast<double>(i) / (steps - 1));
        s.rows.push_back({T, static_cast<double>(count_sl2z(T, norm))});
    }
    return s;
}

inline CountSeries product_count_series(double tMin, double tMax, int steps,
                                        std::string label = "product-lattice-count") {
    if (steps < 2 || tMin < 1 || tMax <= tMin) throw std::invalid_argument("product_count_series: bad range");
    CountSeries s;
    s.kind = SeriesKind::latticeCount;
    s.label = std::move(label);
    for (int i = 0; i < steps; ++i) {
        double T = tMin * std::pow(tMax / tMin, static_cast<double>(i) / (steps - 1));
        s.rows.push_back({T, static_cast<double>(count_product_sl2z(T))});
    }
    return s;
}

// ---------------------------------------------------------------------------
// Orbit distribution in the plane
// ---------------------------------------------------------------------------

/// Limit density of rescaled orbit points gamma v / T: supported on the
/// punctured open disk of radius |v|, where it equals
/// (2/pi^2) sqrt(|v|^2 - |y|^2) / (|v|^2 |y|).
inline double orbit_limit_density(const std::array<double, 2>& v, const std::array<double, 2>& y) {
    double vn = std::hypot(v[0], v[1]);
    double yn = std::hypot(y[0], y[1]);
    if (yn <= 0 || yn >= vn) return 0;
    return (2.0 / (std::numbers::pi * std::numbers::pi)) * std::sqrt(vn * vn - yn * yn) / (vn * vn * yn);
}

/// Independent numeric check that the density integrates to one over the
/// disk: midpoint rule in polar coordinates, where the area element cancels
/// the 1/|y| singularity. The integrand is constant in angle, so the angular
/// sum contributes a factor of grid cells of equal mass.
inline double orbit_density_integral(double vnorm, int grid) {
    const double pi = std::numbers::pi;
    double dr = vnorm / grid, dth = 2 * pi / grid;
    double sum = 0;
    for (int i = 0; i < grid; ++i) {
        double r = (i + 0.5) * dr;
        double f = (2.0 / (pi * pi)) * std::sqrt(std::max(0.0, vnorm * vnorm - r * r)) / (vnorm * vnorm * r);
        sum += f * r * dr * dth * grid;
    }
    return sum;
}

struct OrbitHistogram {
    int bins = 0;
    double vnorm = 0;
    long long count = 0;
    double tvDistance = 0;      // total variation against the binned density
    double maxRadiusRatio = 0;  // max |gamma v| / (T |v|)
    struct Row {
        double rCenter, thetaCenter, empirical, predicted;
    };
    std::vector<Row> rows;
};

/// Enumerate the Frobenius ball of SL(2,Z) at radius T, histogram the
/// rescaled orbit of v on a polar grid over the disk of radius |v|, and
/// compare against the closed-form limit density bin by bin.
inline OrbitHistogram orbit_distribution(const std::array<double, 2>& v, double T, int bins) {
    if (bins < 2 || T < 10) throw std::invalid_argument("orbit_distribution: need bins >= 2, T >= 10");
    const double pi = std::numbers::pi;
    const double vn = std::hypot(v[0], v[1]);
    if (vn <= 0) throw std::invalid_argument("orbit_distribution: v must be nonzero");

    OrbitHistogram h;
    h.bins = bins;
    h.vnorm = vn;
    std::vector<double> mass(static_cast<std::size_t>(bins) * bins, 0.0);

    long long C = static_cast<long long>(std::floor(T));
    const double T2 = T * T;
    for (long long c = -C; c <= C; ++c)
        for (long long d = -C; d <= C; ++d) {
            if ((c | d) == 0 || detail::gcdll(c, d) != 1) continue;
            if (static_cast<double>(c * c + d * d) > T2) continue;
            auto [a0, b0] = detail::det_one_row(c, d);
            double S = T2 - static_cast<double>(c * c + d * d);
            double A = static_cast<double>(c * c + d * d);
            double Bq = 2.0 * (static_cast<double>(a0) * c + static_cast<double>(b0) * d);
            double Cq = static_cast<double>(a0 * a0 + b0 * b0) - S;
            double disc = Bq * Bq - 4 * A * Cq;
            if (disc < 0) disc = 0;
            double sq = std::sqrt(disc);
            long long tlo = static_cast<long long>(std::ceil((-Bq - sq) / (2 * A)));
            long long thi = static_cast<long long>(std::floor((-Bq + sq) / (2 * A)));
            while (true) {  // exact edge correction
                long long a = a0 + (tlo - 1) * c, b = b0 + (tlo - 1) * d;
                if (static_cast<double>(a * a + b * b + c * c + d * d) <= T2) --tlo; else break;
            }
            while (true) {
                long long a = a0 + (thi + 1) * c, b = b0 + (thi + 1) * d;
                if (static_cast<double>(a * a + b * b + c * c + d * d) <= T2) ++thi; else break;
            }
            for (long long t = tlo; t <= thi; ++t) {
                long long a = a0 + t * c, b = b0 + t * d;
                if (static_cast<double>(a * a + b * b + c * c + d * d) > T2) continue;
                double x = (a * v[0] + b * v[1]) / T;
                double y = (c * v[0] + d * v[1]) / T;
                double r = std::hypot(x, y);
                h.maxRadiusRatio = std::max(h.maxRadiusRatio, r / vn);
                double theta = std::atan2(y, x);
                if (theta < 0) theta += 2 * pi;
                int ri = std::min(bins - 1, static_cast<int>(r / vn * bins));
                int ti = std::min(bins - 1, static_cast<int>(theta / (2 * pi) * bins));
                mass[static_cast<std::size_t>(ri) * bins + ti] += 1.0;
                ++h.count;
            }
        }

    // predicted mass: closed-form radial integral, uniform in angle
    auto radialMass = [&](double r0, double r1) {
        auto F = [&](double r) {
            r = std::min(r, vn);
            return (r * std::sqrt(std::max(0.0, vn * vn - r * r)) + vn * vn * std::asin(std::min(1.0, r / vn))) / 2.0;
        };
        return (4.0 / pi) * (F(r1) - F(r0)) / (vn * vn);
    };
    double tv = 0;
    for (int ri = 0; ri < bins; ++ri) {
        double r0 = vn * ri / bins, r1 = vn * (ri + 1) / bins;
        double pred = radialMass(r0, r1) / bins;
        for (int ti = 0; ti < bins; ++ti) {
            double emp = h.count > 0 ? mass[static_cast<std::size_t>(ri) * bins + ti] / h.count : 0.0;
            tv += std::abs(emp - pred);
            h.rows.push_back({(r0 + r1) / 2, 2 * pi * (ti + 0.5) / bins, emp, pred});
        }
    }
    h.tvDistance = tv / 2;
    return h;
}

}  // namespace haarlim
