// Canonical JSON serialization of reports and series. Rationals appear in
// lowest terms as {"num", "den"}; objects serialize with sorted keys, so a
// fixed input always produces byte-identical output.
#pragma once

#include <fstream>

#include <json.hpp>

#include "haarlim/growth.hpp"
#include "haarlim/harness.hpp"

namespace haarlim {

using json = nlohmann::json;

inline json to_json(const Rat& x) {
    return json{{"num", to_int64(numerator(x))}, {"den", to_int64(denominator(x))}};
}

inline Rat rat_from_json(const json& j) { return Rat(Int(j.at("num").get<std::int64_t>()), Int(j.at("den").get<std::int64_t>())); }

inline json to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline json to_json(const std::optional<Rat>& x) { return x ? to_json(*x) : json(nullptr); }

inline json to_json(const Face& f) {
    json j;
    j["dim"] = f.dim;
    j["tightFacets"] = f.tightFacets;
    j["relint"] = to_json(f.relint);
    json vs = json::array();
    for (const auto& v : f.vertex_coords()) vs.push_back(to_json(v));
    j["vertices"] = vs;
    return j;
}

inline json to_json(const ExpSum& es) {
    json terms = json::array();
    for (const auto& [g, h] : es.terms) {
        json t;
        t["weight"] = to_json(g.coords);
        t["coefficient"] = h;
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

inline json to_json(const Frame& fr) {
    json j;
    j["faceDim"] = fr.s;
    j["basisIdx"] = fr.basisIdx;
    json db = json::array();
    for (const auto& y : fr.dualBasis) db.push_back(to_json(y.coords));
    j["dualBasis"] = db;
    json mu = json::array();
    for (const auto& row : fr.mu) mu.push_back(to_json(row));
    j["mu"] = mu;
    json kap = json::array();
    for (const auto& k : fr.kappa) kap.push_back(to_json(k));
    j["kappa"] = kap;
    json te = json::array();
    for (const auto& t : fr.tauExp) te.push_back(to_json(t));
    j["tauExp"] = te;
    json forms = json::array();
    for (const auto& f : fr.weightForms) {
        json w;
        w["constant"] = to_json(f.constant);
        w["linear"] = to_json(f.linear);
        forms.push_back(w);
    }
    j["weightForms"] = forms;
    return j;
}

inline json report_to_json(const GrowthReport& rpt, const std::string& expr = "") {
    json j;
    if (!expr.empty()) j["repExpr"] = expr;
    json rep;
    rep["factors"] = rpt.rep.rs->factors;
    rep["dimV"] = rpt.rep.dim_v();
    json ws = json::array();
    for (const auto& [w, m] : rpt.rep.weights) {
        json e;
        e["coords"] = to_json(w.coords);
        e["multiplicity"] = m;
        ws.push_back(e);
    }
    rep["weights"] = ws;
    j["rep"] = rep;

    j["d"] = to_json(rpt.d);
    j["e"] = rpt.e;
    j["faceBeta"] = to_json(rpt.faceBeta);
    j["faceBetaDual"] = to_json(rpt.faceBetaDual);
    j["chamberOK"] = rpt.chamberOK;
    j["normalGrowthStrict"] = rpt.normalGrowthStrict;

    j["lambda"] = to_json(rpt.consts.lambda);
    j["tau"] = to_json(rpt.consts.tau);
    j["xi"] = to_json(rpt.consts.xi);
    j["xiUnconstrained"] = !rpt.consts.xi.has_value();
    j["xiPrimeSup"] = to_json(rpt.consts.xiPrimeSup);
    j["xiPrimeStrict"] = true;  // reported as a supremum of admissible values
    j["mMin"] = rpt.mMin ? json(*rpt.mMin) : json(nullptr);
    j["tau1"] = rpt.tau1Formula ? json(*rpt.tau1Formula) : json(nullptr);
    j["tau1Table"] = rpt.tau1Table ? json(*rpt.tau1Table) : json(nullptr);
    j["xi1Sup"] = to_json(rpt.xi1Sup);
    j["xi1Strict"] = true;
    if (rpt.e == 0) {
        json a0;
        a0["alpha"] = to_json(Rat(1));
        a0["v"] = to_json(rpt.consts.alpha0V);
        a0["alpha0"] = to_json(rpt.consts.alpha0);
        j["alpha0AtHolderOne"] = a0;
    } else {
        j["alpha0AtHolderOne"] = nullptr;
    }
    j["frame"] = to_json(rpt.frame);

    json omega;
    omega["size"] = rpt.expsum.terms.size();
    json o1 = json::array();
    for (const auto& g : rpt.omega.omega1) o1.push_back(to_json(g.coords));
    omega["omega1"] = o1;
    omega["omega2Size"] = rpt.omega.omega2.size();
    j["omega"] = omega;

    json conv;
    conv["tauXiRatios"] = "numerators use tauExp[j] + 1; the tabulated small-rank variants that use tauExp[j] "
                          "instead are kept as annotated test fixtures";
    conv["tau1"] = "tau1 is the 4m + 2 dimG formula value; tau1Table is the tabulated literal, which differs at "
                   "rank two";
    conv["suprema"] = "xiPrimeSup and xi1Sup are suprema of admissible exponents; admissible values are strictly "
                      "below them";
    j["conventions"] = conv;
    return j;
}

inline json fit_to_json(const FitResult& fit) {
    json j;
    j["dHat"] = fit.dHat;
    j["eHat"] = fit.eHat;
    j["constantHat"] = fit.constantHat;
    j["residual"] = fit.residual;
    j["window"] = json{{"tMin", fit.tMin}, {"tMax", fit.tMax}};
    return j;
}

inline void write_json(const std::string& path, const json& j) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << j.dump(2) << "\n";
}

inline void write_series_csv(const std::string& path, const CountSeries& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "# " << s.label << "\n";
    os << "T," << (s.kind == SeriesKind::latticeCount ? "count" : "volume") << "\n";
    char buf[64];
    for (const auto& [t, v] : s.rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", t, v);
        os << buf;
    }
}

inline void write_histogram_csv(const std::string& path, const OrbitHistogram& h, const std::string& label) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "# " << label << "\n";
    os << "binCenterRadius,binCenterAngle,empiricalMass,predictedMass\n";
    char buf[128];
    for (const auto& row : h.rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", row.rCenter, row.thetaCenter, row.empirical,
                      row.predicted);
        os << buf;
    }
}

}  // namespace haarlim
