#include "twistknot/numroots.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "twistknot/twistcore.hpp"

namespace twistknot {

namespace {

using cplx = std::complex<double>;

cplx horner(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Initial moduli from the Newton polygon: the upper convex hull of
// (i, log|a_i|) yields one radius per hull edge, repeated over the edge
// width.  The radii track the annuli the roots actually live in, which a
// single scaled circle does not once the coefficient profile bulges.
std::vector<double> initial_radii(const std::vector<cplx>& monic) {
    const size_t n = monic.size() - 1;
    std::vector<std::pair<double, double>> hull;
    for (size_t i = 0; i <= n; ++i) {
        const double m = std::abs(monic[i]);
        if (m == 0.0) continue;
        const std::pair<double, double> p{static_cast<double>(i), std::log(m)};
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            if ((b.second - a.second) * (p.first - a.first) <=
                (p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<double> radii;
    radii.reserve(n);
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        const auto& a = hull[e];
        const auto& b = hull[e + 1];
        const int width = static_cast<int>(b.first - a.first);
        const double r = std::exp((a.second - b.second) / (b.first - a.first));
        for (int m = 0; m < width; ++m) radii.push_back(r);
    }
    // roots at the origin (zero constant coefficients) get a small circle
    if (radii.empty()) radii.push_back(1e-3);
    while (radii.size() < n) radii.insert(radii.begin(), radii.front() * 1e-2);
    return radii;
}

}  // namespace

std::vector<cplx> find_roots(const IntPolynomial& p, double tol) {
    if (p.is_zero() || *p.degree() < 1)
        throw Error("root finding needs a polynomial of degree >= 1");
    const size_t n = static_cast<size_t>(*p.degree());

    std::vector<cplx> monic(n + 1);
    const double lead = p.leading().get_d();
    for (size_t i = 0; i <= n; ++i)
        monic[i] = cplx(p.coeff(static_cast<int>(i)).get_d() / lead, 0.0);

    const std::vector<double> radii = initial_radii(monic);
    const double theta0 = 0.83729;  // keeps every start off the real axis
    std::vector<cplx> z(n);
    for (size_t j = 0; j < n; ++j) {
        const double ang = theta0 + 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
        z[j] = std::polar(radii[j], ang);
    }

    const int max_iters = 500;
    for (int iter = 0; iter < max_iters; ++iter) {
        double max_update = 0.0;
        for (size_t j = 0; j < n; ++j) {
            cplx denom(1.0, 0.0);
            for (size_t k = 0; k < n; ++k)
                if (k != j) denom *= z[j] - z[k];
            const cplx dz = horner(monic, z[j]) / denom;
            z[j] -= dz;
            max_update = std::max(max_update, std::abs(dz));
        }
        if (max_update < tol) return z;
        if (!std::isfinite(max_update)) break;
    }

    // The update size bottoms out on the rounding noise of evaluating p, so
    // the cap is not itself a failure: accept when every residual clears
    // tol times the per-root evaluation scale sum |a_i| max(1,|z|)^i.
    bool all_within_scale = true;
    double worst = 0.0;
    for (size_t j = 0; j < n; ++j) {
        const double res = std::abs(horner(monic, z[j]));
        double scale = 0.0;
        double zp = 1.0;
        const double zb = std::max(1.0, std::abs(z[j]));
        for (size_t i = 0; i <= n; ++i) {
            scale += std::abs(monic[i]) * zp;
            zp *= zb;
        }
        if (!(res <= tol * scale)) all_within_scale = false;
        if (!(res <= worst)) worst = res;  // NaN-propagating maximum
    }
    if (all_within_scale) return z;

    std::ostringstream msg;
    msg << "root iteration did not converge in " << max_iters << " sweeps; best residual "
        << worst;
    throw NoConvergence(msg.str());
}

std::vector<RootReport> evaluate_at_roots(int q, double tol) {
    if (q == 0) throw InvalidQ();
    const IntPolynomial phi = riley(q);
    const TwistedAlexander ta = twisted_alexander(q);

    std::vector<RootReport> reports;
    for (const cplx& root : find_roots(phi, tol)) {
        RootReport r;
        r.root = root;
        r.residual = std::abs(phi.eval_complex(root));
        const cplx g = ta.gamma.eval_complex(root);
        const cplx d = ta.delta.eval_complex(root);
        r.delta_eval = {g, d, g};
        r.gamma_abs = std::abs(g);
        r.monic_distance = std::min(std::abs(g - 1.0), std::abs(g + 1.0));
        reports.push_back(r);
    }
    return reports;
}

}  // namespace twistknot
