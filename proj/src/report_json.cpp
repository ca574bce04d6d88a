#include "twistknot/report_json.hpp"

#include <json.hpp>

namespace twistknot {

namespace {

using json = nlohmann::ordered_json;

json int_coeff(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json int_coeffs(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(int_coeff(c));
    return arr;
}

json rat_coeffs(const RatPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

mpz_class parse_int_coeff(const json& v) {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return mpz_class(v.get<std::string>());
    throw ParseError("integer coefficient must be a number or string");
}

IntPolynomial parse_int_poly(const json& arr) {
    if (!arr.is_array()) throw ParseError("coefficient list must be an array");
    std::vector<mpz_class> c;
    c.reserve(arr.size());
    for (const auto& v : arr) c.push_back(parse_int_coeff(v));
    return IntPolynomial(std::move(c));
}

RatPolynomial parse_rat_poly(const json& arr) {
    if (!arr.is_array()) throw ParseError("coefficient list must be an array");
    std::vector<mpq_class> c;
    c.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) throw ParseError("rational coefficient must be a string");
        mpq_class r;
        if (mpq_set_str(r.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
            throw ParseError("malformed rational: " + v.get<std::string>());
        r.canonicalize();
        c.push_back(std::move(r));
    }
    return RatPolynomial(std::move(c));
}

json degree_or_null(const std::optional<int>& d) {
    if (d) return *d;
    return nullptr;
}

}  // namespace

std::string render_report_json(const ConjectureReport& r) {
    json j;
    j["schema_version"] = "1";
    j["q"] = r.q;
    j["knot"] = r.knot;
    j["riley"] = {{"coeffs", int_coeffs(r.riley_poly)},
                  {"degree", r.riley_degree},
                  {"leading", r.riley_leading}};
    j["tau_q"] = {{"coeffs", int_coeffs(r.tau)}};
    j["gamma"] = {{"coeffs", int_coeffs(r.gamma)}, {"degree", r.gamma_degree}};
    j["delta"] = {{"coeffs", int_coeffs(r.delta)}, {"degree", degree_or_null(r.delta_degree)}};
    j["alexander"] = {r.alexander[0], r.alexander[1], r.alexander[2]};
    j["certificates"] = {{"gcd_gamma", rat_coeffs(r.gcd_gamma)},
                         {"gcd_gamma_minus_1", rat_coeffs(r.gcd_gamma_minus_1)},
                         {"gcd_gamma_plus_1", rat_coeffs(r.gcd_gamma_plus_1)}};
    j["verdicts"] = {{"genus_detected", r.genus_detected},
                     {"monic_at_some_rep", r.monic_at_some_rep},
                     {"fibered_expected", r.fibered_expected},
                     {"consistent", r.verdict_consistent}};
    json fox;
    fox["ran"] = r.fox_oracle_agrees.has_value();
    if (r.fox_oracle_agrees)
        fox["agrees"] = *r.fox_oracle_agrees;
    else
        fox["agrees"] = nullptr;
    j["fox_check"] = fox;
    if (r.numeric) {
        json roots = json::array();
        for (const RootReport& root : r.numeric->roots) {
            roots.push_back({{"re", root.root.real()},
                             {"im", root.root.imag()},
                             {"residual", root.residual},
                             {"gamma_abs", root.gamma_abs},
                             {"monic_distance", root.monic_distance}});
        }
        j["numeric"] = {{"roots", roots}};
    } else {
        j["numeric"] = nullptr;
    }
    return j.dump();
}

ConjectureReport parse_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report JSON: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<std::string>() != "1")
            throw ParseError("unsupported schema_version");
        ConjectureReport r;
        r.q = j.at("q").get<int>();
        r.knot = j.at("knot").get<std::string>();
        r.riley_poly = parse_int_poly(j.at("riley").at("coeffs"));
        r.riley_degree = j.at("riley").at("degree").get<int>();
        r.riley_leading = j.at("riley").at("leading").get<long long>();
        r.tau = parse_int_poly(j.at("tau_q").at("coeffs"));
        r.gamma = parse_int_poly(j.at("gamma").at("coeffs"));
        r.gamma_degree = j.at("gamma").at("degree").get<int>();
        r.delta = parse_int_poly(j.at("delta").at("coeffs"));
        if (!j.at("delta").at("degree").is_null())
            r.delta_degree = j.at("delta").at("degree").get<int>();
        const auto& alex = j.at("alexander");
        if (!alex.is_array() || alex.size() != 3) throw ParseError("alexander must have 3 entries");
        for (size_t i = 0; i < 3; ++i) r.alexander[i] = alex[i].get<long long>();
        r.gcd_gamma = parse_rat_poly(j.at("certificates").at("gcd_gamma"));
        r.gcd_gamma_minus_1 = parse_rat_poly(j.at("certificates").at("gcd_gamma_minus_1"));
        r.gcd_gamma_plus_1 = parse_rat_poly(j.at("certificates").at("gcd_gamma_plus_1"));
        r.genus_detected = j.at("verdicts").at("genus_detected").get<bool>();
        r.monic_at_some_rep = j.at("verdicts").at("monic_at_some_rep").get<bool>();
        r.fibered_expected = j.at("verdicts").at("fibered_expected").get<bool>();
        r.verdict_consistent = j.at("verdicts").at("consistent").get<bool>();
        if (j.at("fox_check").at("ran").get<bool>())
            r.fox_oracle_agrees = j.at("fox_check").at("agrees").get<bool>();
        if (!j.at("numeric").is_null()) {
            NumericSummary s;
            for (const auto& v : j.at("numeric").at("roots")) {
                RootReport root;
                root.root = {v.at("re").get<double>(), v.at("im").get<double>()};
                root.residual = v.at("residual").get<double>();
                root.gamma_abs = v.at("gamma_abs").get<double>();
                root.monic_distance = v.at("monic_distance").get<double>();
                s.roots.push_back(root);
            }
            r.numeric = std::move(s);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report JSON missing fields: ") + e.what());
    }
}

}  // namespace twistknot
