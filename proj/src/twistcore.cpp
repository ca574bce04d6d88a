#include "twistknot/twistcore.hpp"

#include <cstdlib>
#include <mutex>
#include <vector>

namespace twistknot {

namespace {

std::mutex table_mutex;
std::vector<IntPolynomial> s_table;    // S_0, S_1, ...
std::vector<IntPolynomial> tau_table;  // tau_0, tau_1, ...

// Extends both tables up to index n under the shared recursion
// f_k = (u^2+2) f_{k-1} - f_{k-2}.
void extend_tables(size_t n) {
    const IntPolynomial step = eigen_trace_poly();
    if (s_table.empty()) {
        s_table = {IntPolynomial::zero(), IntPolynomial{1}};
        tau_table = {IntPolynomial{2}, step};
    }
    while (s_table.size() <= n) {
        const size_t k = s_table.size();
        s_table.push_back(step * s_table[k - 1] - s_table[k - 2]);
        tau_table.push_back(step * tau_table[k - 1] - tau_table[k - 2]);
    }
}

IntPolynomial s_at(int k) {
    const size_t n = static_cast<size_t>(std::abs(k));
    std::lock_guard<std::mutex> lock(table_mutex);
    extend_tables(n);
    return k >= 0 ? s_table[n] : -s_table[n];
}

IntPolynomial tau_at(int k) {
    const size_t n = static_cast<size_t>(std::abs(k));
    std::lock_guard<std::mutex> lock(table_mutex);
    extend_tables(n);
    return tau_table[n];
}

}  // namespace

IntPolynomial chebyshev_s(int k) { return s_at(k); }

IntPolynomial trace_tau(int k) { return tau_at(k); }

IntPolynomial riley(int q) {
    if (q == 0) throw InvalidQ();
    return IntPolynomial{1, -1} * s_at(q) - s_at(q - 1);
}

TwistedAlexander twisted_alexander(int q) {
    if (q == 0) throw InvalidQ();
    const QuadElement a = geometric_sum(q);
    IntPolynomial gamma = norm(a);
    IntPolynomial delta =
        embed_trace(a) - gamma * IntPolynomial{2} + a.b * IntPolynomial::monomial(2);
    return {std::move(gamma), std::move(delta), q};
}

IntPolynomial gamma_via_trace(int q) {
    if (q == 0) throw InvalidQ();
    const RatPolynomial num = to_rational(tau_at(q) - IntPolynomial{2});
    return to_integer(divexact(num, RatPolynomial::monomial(2)));
}

std::array<long long, 3> classical_alexander(int q) {
    return {q, -(2LL * q - 1), q};
}

KnotFacts knot_facts(int q) {
    if (q == 0) throw InvalidQ();
    KnotFacts f;
    f.q = q;
    f.genus = 1;
    f.fibered = (q == 1 || q == -1);
    f.hyperbolic = (q != 1);
    f.alexander = classical_alexander(q);
    return f;
}

std::string knot_label(int q) {
    return "J(2," + std::to_string(2LL * q) + ")";
}

}  // namespace twistknot
