#include "slopelab/report.hpp"

#include <sstream>

namespace slopelab {

namespace {

std::string opt_slope(const std::optional<Rational>& s) {
    return s ? rational_to_string(*s) : "-";
}

} // namespace

Json quasipoly_json(const QuasiPoly& qp) {
    Json coeffs = Json::array();
    for (int r = 0; r < qp.period; ++r) {
        const auto& co = qp.coeffs[r];
        bool unknown = !qp.c_unknown.empty() && qp.c_unknown[r];
        coeffs.push_back({rational_to_string(co.a), rational_to_string(co.b),
                          unknown ? std::string("?") : rational_to_string(co.c)});
    }
    Json j;
    j["period"] = qp.period;
    j["coeffs"] = coeffs;
    j["threshold"] = qp.threshold;
    return j;
}

Json fit_report_json(const QuasiPoly& qp, const SlopeData& slopes, const ConditionDelta& cond,
                     const SignRecord& sign) {
    Json j = quasipoly_json(qp);
    Json js = Json::array(), jx = Json::array();
    for (const auto& r : slopes.js) js.push_back(rational_to_string(r));
    for (const auto& r : slopes.jx) jx.push_back(rational_to_string(r));
    j["js"] = js;
    j["jx"] = jx;
    j["condition_delta"] = cond.pass ? "pass" : ("fail: " + cond.reason);
    Json s;
    s["satisfied"] = sign.satisfied;
    s["normalized"] = sign.normalized;
    s["range"] = {sign.n_lo, sign.n_hi};
    s["sign_even"] = sign.sign_even;
    s["sign_odd"] = sign.sign_odd;
    if (!sign.satisfied) s["witness"] = {sign.witness_m, sign.witness_n};
    j["sign_condition"] = s;
    return j;
}

Json surface_record_json(const SurfaceRecord& r) {
    Json j;
    j["path"] = r.family.name();
    j["omega"] = r.omega;
    j["alpha"] = r.weights.alpha;
    j["beta"] = r.weights.beta;
    if (r.weights.aux_n) j["aux_n"] = *r.weights.aux_n;
    j["chi"] = r.chi;
    j["slope1"] = opt_slope(r.slope1);
    j["slope2"] = opt_slope(r.slope2);
    j["count1"] = r.count1;
    j["count2"] = r.count2;
    j["orientable"] =
        r.orientable == Orientability::GuaranteedOrientable ? "guaranteed" : "unknown";
    return j;
}

Json glued_surface_json(const GluedSurface& g) {
    Json j;
    j["case"] = g.case_tag;
    j["m"] = g.m;
    j["n"] = g.n;
    j["chi"] = g.chi_total;
    j["boundary_count"] = g.boundary_count;
    j["slope"] = rational_to_string(g.slope);
    j["q_den"] = g.q_den;
    j["ss_ratio"] = rational_to_string(g.ss_ratio);
    return j;
}

Json strong_slope_json(const StrongSlopeReport& r) {
    Json j;
    j["a_W"] = rational_to_string(r.a_W);
    j["b_W"] = rational_to_string(r.b_W);
    j["surface"] = glued_surface_json(r.surface);
    j["slope_identity"] = r.slope_ok ? "pass" : "fail";
    j["ss_identity"] = r.ratio_ok ? "pass" : "fail";
    j["verdict"] = r.pass() ? "pass" : "fail";
    return j;
}

Json adequacy_json(const AdequacyVerdict& v) {
    Json j;
    j["a_adequate"] = v.a_adequate;
    j["b_adequate"] = v.b_adequate;
    j["adequate"] = v.a_adequate && v.b_adequate;
    j["a_loop_witnesses"] = v.a_loop_witnesses;
    j["b_loop_witnesses"] = v.b_loop_witnesses;
    return j;
}

Json inadequacy_json(const InadequacyReport& r) {
    Json j;
    j["a_plus"] = rational_to_string(r.a_plus);
    j["a_minus"] = rational_to_string(r.a_minus);
    j["half_integral_plus"] = r.half_integral_plus;
    j["half_integral_minus"] = r.half_integral_minus;
    j["excludes_a_adequate"] = r.excludes_a_adequate;
    j["excludes_b_adequate"] = r.excludes_b_adequate;
    j["inadequate_by_degrees"] = r.inadequate_by_degrees;
    j["genus_test_applies"] = r.genus_test_applies;
    j["genus_test_inadequate"] = r.genus_test_inadequate;
    j["uses_cited_genus_fact"] = r.uses_cited_genus_fact;
    j["verdict"] = r.verdict;
    return j;
}

std::string surface_csv_header() {
    return "path,branch_pattern,chi,slope1,slope2,count1,count2,orientable\n";
}

std::string surface_csv_row(const SurfaceRecord& r) {
    std::ostringstream os;
    long long k = r.omega > 0 ? r.omega : -r.omega;
    os << r.family.name() << "," << branch_pattern(r.family.id, (int)k) << "," << r.chi << ","
       << opt_slope(r.slope1) << "," << opt_slope(r.slope2) << "," << r.count1 << ","
       << r.count2 << ","
       << (r.orientable == Orientability::GuaranteedOrientable ? "guaranteed" : "unknown")
       << "\n";
    return os.str();
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

std::string quasipoly_text(const QuasiPoly& qp) {
    std::ostringstream os;
    for (int r = 0; r < qp.period; ++r) {
        const auto& co = qp.coeffs[r];
        if (qp.period > 1) os << "n%2==" << r << ": ";
        os << rational_to_string(co.a) << "*n^2 + " << rational_to_string(co.b) << "*n + ";
        if (!qp.c_unknown.empty() && qp.c_unknown[r]) os << "?";
        else os << rational_to_string(co.c);
        os << "\n";
    }
    os << "valid for n >= " << qp.threshold << "\n";
    return os.str();
}

} // namespace slopelab
