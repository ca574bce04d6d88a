#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistknot/numroots.hpp"
#include "twistknot/twistcore.hpp"

namespace twistknot {

/*
 * Per-knot verification certificate.  The gcd certificates are the whole
 * argument: gcd(phi_q, gamma_q) = 1 excludes a common complex root, so the
 * twisted Alexander polynomial keeps exact t-degree 2 = 4g - 2 at every
 * parabolic representation, and gcd(phi_q, gamma_q -+ 1) = 1 excludes a
 * monic value at any of them.  The Fox oracle and the numeric layer are
 * opt-in corroboration and never feed the verdict.
 */

struct CertifyOptions {
    bool run_fox = false;
    bool run_numeric = false;
    double tol = 1e-12;  // root-finder tolerance for the numeric layer
};

struct NumericSummary {
    std::vector<RootReport> roots;
    double max_residual = 0.0;
    double vieta_error = 0.0;
    double min_gamma_abs = 0.0;
    double min_monic_distance = 0.0;
    bool ok = false;  // converged and every |gamma(root)| >= 1e-6
};

struct ConjectureReport {
    int q = 0;
    std::string knot;

    IntPolynomial riley_poly;
    IntPolynomial tau;    // tau_|q|
    IntPolynomial gamma;  // outer coefficient of Delta
    IntPolynomial delta;  // middle coefficient of Delta
    std::array<long long, 3> alexander{};

    int riley_degree = 0;
    long long riley_leading = 0;
    int gamma_degree = 0;
    std::optional<int> delta_degree;  // empty when delta is the zero polynomial

    RatPolynomial gcd_gamma;
    RatPolynomial gcd_gamma_minus_1;
    RatPolynomial gcd_gamma_plus_1;

    bool genus_detected = false;     // gcd_gamma = 1
    bool monic_at_some_rep = false;  // gcd_gamma_minus_1 != 1 or gcd_gamma_plus_1 != 1
    bool fibered_expected = false;   // |q| = 1
    bool verdict_consistent = false;

    std::optional<bool> fox_oracle_agrees;
    std::optional<NumericSummary> numeric;
};

// Runs every certificate for one q.  Throws InvalidQ for q = 0 and
// propagates oracle errors with the failing sub-check named.
ConjectureReport certify(int q, const CertifyOptions& options = {});

// deg phi_q = 2|q| - max(sign(q),0), deg gamma_q = 2|q| - 2, and the former
// strictly exceeds the latter.
bool degree_audit(int q);

}  // namespace twistknot
