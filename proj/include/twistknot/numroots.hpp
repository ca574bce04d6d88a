#pragma once

#include <array>
#include <complex>
#include <vector>

#include "twistknot/exactpoly.hpp"

namespace twistknot {

/*
 * Floating-point corroboration layer.  Each root of the Riley polynomial is
 * one parabolic representation; the exact certificates never depend on this
 * module.
 */

struct RootReport {
    std::complex<double> root;
    double residual = 0.0;  // |phi_q(root)|
    // gamma(root), delta(root), gamma(root)
    std::array<std::complex<double>, 3> delta_eval{};
    double gamma_abs = 0.0;
    double monic_distance = 0.0;  // min(|gamma(root) - 1|, |gamma(root) + 1|)
};

// All complex roots by the Weierstrass (Durand-Kerner) simultaneous
// iteration.  Deterministic start: roots of unity scaled by a coefficient
// bound and rotated by a fixed angle.  Stops when the largest update drops
// below tol; throws NoConvergence after 500 sweeps.
std::vector<std::complex<double>> find_roots(const IntPolynomial& p, double tol = 1e-12);

// Root reports for phi_q with the exact twisted Alexander coefficients
// evaluated at every root.
std::vector<RootReport> evaluate_at_roots(int q, double tol = 1e-12);

}  // namespace twistknot
