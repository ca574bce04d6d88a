#pragma once

#include <array>
#include <string>

#include "twistknot/exactpoly.hpp"
#include "twistknot/quadring.hpp"

namespace twistknot {

/*
 * The named polynomials of the twist knot J(2,2q): the trace polynomials
 * tau_k, the Chebyshev-like ratio polynomials S_k, the Riley polynomial
 * phi_q whose roots parametrize the parabolic representations, and the
 * twisted Alexander triple (gamma, delta, gamma).
 */

// Coefficients of gamma + delta*t + gamma*t^2.  The outer coefficient is the
// same at t^0 and t^2 and is never the zero polynomial.
struct TwistedAlexander {
    IntPolynomial gamma;
    IntPolynomial delta;
    int q = 0;
};

// Reference facts about J(2,2q): genus one, fibered iff |q| = 1, hyperbolic
// iff q is outside {0,1}; classical Alexander polynomial q - (2q-1)t + qt^2.
struct KnotFacts {
    int q = 0;
    int genus = 1;
    bool fibered = false;
    bool hyperbolic = false;
    std::array<long long, 3> alexander{};
};

// S_k with S_0 = 0, S_1 = 1, S_k = (u^2+2) S_{k-1} - S_{k-2}, S_{-k} = -S_k.
IntPolynomial chebyshev_s(int k);

// tau_k with tau_0 = 2, tau_1 = u^2+2, same recursion; tau_{-k} = tau_k.
IntPolynomial trace_tau(int k);

// Riley polynomial phi_q = (1-u) S_q - S_{q-1}; throws InvalidQ for q = 0.
IntPolynomial riley(int q);

// Exact twisted Alexander coefficients at a parabolic representation:
// gamma = norm(A) and delta = embed_trace(A) - 2 gamma + b u^2 where
// A = a + bL is the geometric sum of the eigenvalue, using
// (L+ - L-)^2 = u^2 (2 + L+ + L-) to clear the radical.
TwistedAlexander twisted_alexander(int q);

// Independent route to gamma: (tau_|q| - 2) / u^2, exact.
IntPolynomial gamma_via_trace(int q);

// q - (2q-1)t + qt^2 as an integer triple (defined for every q).
std::array<long long, 3> classical_alexander(int q);

KnotFacts knot_facts(int q);

// "J(2,4)" for q = 2, "J(2,-2)" for q = -1, ...
std::string knot_label(int q);

}  // namespace twistknot
