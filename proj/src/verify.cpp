#include "twistknot/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "twistknot/foxwada.hpp"

namespace twistknot {

namespace {

long long leading_as_int(const IntPolynomial& p) {
    const mpz_class& lead = p.leading();
    if (!lead.fits_slong_p()) throw Error("leading coefficient out of integer range");
    return lead.get_si();
}

NumericSummary numeric_summary(int q, double tol) {
    NumericSummary s;
    s.roots = evaluate_at_roots(q, tol);

    const IntPolynomial phi = riley(q);
    const int n = *phi.degree();
    std::complex<double> sum(0.0, 0.0);
    s.min_gamma_abs = std::numeric_limits<double>::infinity();
    s.min_monic_distance = std::numeric_limits<double>::infinity();
    for (const RootReport& r : s.roots) {
        sum += r.root;
        s.max_residual = std::max(s.max_residual, r.residual);
        s.min_gamma_abs = std::min(s.min_gamma_abs, r.gamma_abs);
        s.min_monic_distance = std::min(s.min_monic_distance, r.monic_distance);
    }
    const double expected =
        -(phi.coeff(n - 1).get_d() / phi.leading().get_d());
    s.vieta_error = std::abs(sum - std::complex<double>(expected, 0.0));
    s.ok = (s.min_gamma_abs >= 1e-6);
    return s;
}

}  // namespace

ConjectureReport certify(int q, const CertifyOptions& options) {
    if (q == 0) throw InvalidQ();

    ConjectureReport r;
    r.q = q;
    r.knot = knot_label(q);

    r.riley_poly = riley(q);
    r.tau = trace_tau(q);
    const TwistedAlexander ta = twisted_alexander(q);
    r.gamma = ta.gamma;
    r.delta = ta.delta;
    r.alexander = classical_alexander(q);

    r.riley_degree = *r.riley_poly.degree();
    r.riley_leading = leading_as_int(r.riley_poly);
    r.gamma_degree = *r.gamma.degree();
    r.delta_degree = r.delta.degree();

    const RatPolynomial phi = to_rational(r.riley_poly);
    const RatPolynomial gamma = to_rational(r.gamma);
    const RatPolynomial one{1};
    r.gcd_gamma = poly_gcd(phi, gamma);
    r.gcd_gamma_minus_1 = poly_gcd(phi, gamma - one);
    r.gcd_gamma_plus_1 = poly_gcd(phi, gamma + one);

    r.genus_detected = is_one(r.gcd_gamma);
    r.monic_at_some_rep = !is_one(r.gcd_gamma_minus_1) || !is_one(r.gcd_gamma_plus_1);
    r.fibered_expected = (std::abs(q) == 1);
    r.verdict_consistent = (r.monic_at_some_rep == r.fibered_expected) && r.genus_detected;

    if (options.run_fox) {
        try {
            r.fox_oracle_agrees = wada_matches_closed_form(q);
        } catch (const Error& e) {
            throw Error(std::string("fox oracle failed for q=") + std::to_string(q) + ": " +
                        e.what());
        }
    }
    if (options.run_numeric) {
        try {
            r.numeric = numeric_summary(q, options.tol);
        } catch (const NoConvergence& e) {
            throw NoConvergence(std::string("numeric layer failed for q=") + std::to_string(q) +
                                ": " + e.what());
        }
    }
    return r;
}

bool degree_audit(int q) {
    if (q == 0) throw InvalidQ();
    const int abs_q = std::abs(q);
    const int phi_deg = *riley(q).degree();
    const int gamma_deg = *twisted_alexander(q).gamma.degree();
    const int expected_phi = 2 * abs_q - (q > 0 ? 1 : 0);
    return phi_deg == expected_phi && gamma_deg == 2 * abs_q - 2 && phi_deg > gamma_deg;
}

}  // namespace twistknot
