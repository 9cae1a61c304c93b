#include "sopq/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace sopq {

namespace {

constexpr double kPi = 3.14159265358979323846;

// One integration direction: abscissa angles, combined weights (quadrature
// weight times the sin-power measure factor), and the cosines.
struct Rule {
    std::vector<double> angle;
    std::vector<double> weight;
    std::vector<double> cosv;
};

// Gauss-Legendre rule on [0, pi] with measure sin^{d-2}(theta) d theta.
Rule sphere_rule(int d, int n)
{
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    Rule r;
    r.angle.resize(n);
    r.weight.resize(n);
    r.cosv.resize(n);
    for (int i = 0; i < n; ++i) {
        double th = 0.5 * kPi * (x[i] + 1.0);
        r.angle[i] = th;
        r.weight[i] = 0.5 * kPi * w[i] * std::pow(std::sin(th), d - 2);
        r.cosv[i] = std::cos(th);
    }
    return r;
}

// Periodic trapezoid rule on [0, 2 pi]; spectrally accurate for smooth
// periodic integrands.
Rule circle_rule(int n)
{
    Rule r;
    r.angle.resize(n);
    r.weight.resize(n);
    r.cosv.resize(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * kPi * i / n;
        r.angle[i] = th;
        r.weight[i] = 2.0 * kPi / n;
        r.cosv[i] = std::cos(th);
    }
    return r;
}

void check_scheme(const Signature& sig, const QuadratureConfig& cfg)
{
    bool periodic_phi = (sig.q == 2);
    if (sig.q == 1)
        return; // no phi direction
    Scheme want = periodic_phi ? Scheme::trapezoid_periodic
                               : Scheme::gauss_legendre_angle;
    if (cfg.scheme != want)
        throw std::domain_error(
            "QuadratureConfig: scheme does not match the signature "
            "(trapezoid_periodic only for the q = 2 angular coordinate)");
}

Complex theta_pow(const Complex& sigma, double thv)
{
    return std::exp((sigma / 2.0) * std::log(thv));
}

// Core 2-D integral: sum over nodes of f(x, y, phi, chi) * weights, where
// f is supplied per (i, j) node pair.  Summation order fixed for
// determinism.
template <class F>
Complex integrate2(const Rule& rx, const Rule& ry, F&& f)
{
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < ry.angle.size(); ++j) {
        Complex row(0.0, 0.0);
        for (std::size_t i = 0; i < rx.angle.size(); ++i)
            row += rx.weight[i] * f(i, j);
        acc += ry.weight[j] * row;
    }
    return acc;
}

Complex quad_zonal_once(const Signature& sig, const RepParam& rep,
                        double alpha, int nx, int ny, Scheme scheme)
{
    const Complex sigma = rep.sigma;
    const double sh = std::sinh(alpha), ch = std::cosh(alpha);
    auto th = [&](double x, double y) {
        return 1.0 + (x * x + y * y) * sh * sh - 2.0 * x * y * sh * ch;
    };
    Rule rx = (sig.p >= 3) ? sphere_rule(sig.p, nx) : circle_rule(nx);
    if (sig.q == 1) {
        // Two-point measure y = +-1, weights 1/2 each.
        Complex num(0.0, 0.0);
        double den = 0.0;
        for (std::size_t i = 0; i < rx.angle.size(); ++i) {
            double x = rx.cosv[i];
            num += rx.weight[i] * 0.5
                   * (theta_pow(sigma, th(x, 1.0))
                      + theta_pow(sigma, th(x, -1.0)));
            den += rx.weight[i];
        }
        return num / den;
    }
    Rule ry = (sig.q >= 3) ? sphere_rule(sig.q, ny) : circle_rule(ny);
    (void)scheme;
    Complex num = integrate2(rx, ry, [&](std::size_t i, std::size_t j) {
        return theta_pow(sigma, th(rx.cosv[i], ry.cosv[j]));
    });
    double den = 0.0;
    for (double w : rx.weight)
        den += w;
    double deny = 0.0;
    for (double w : ry.weight)
        deny += w;
    return num / (den * deny);
}

Complex quad_assoc_once(const Signature& sig, const RepParam& rep,
                        int lambda, int mu, double alpha, int nx, int ny)
{
    const Complex sigma = rep.sigma;
    const double sh = std::sinh(alpha), ch = std::cosh(alpha);
    auto th = [&](double x, double y) {
        return 1.0 + (x * x + y * y) * sh * sh - 2.0 * x * y * sh * ch;
    };
    const Complex mi(0.0, -1.0);
    if (sig.q >= 3) {
        if (lambda < 0 || mu < 0)
            throw std::domain_error("quad_assoc: labels must be >= 0 here");
        Rule rx = sphere_rule(sig.p, nx);
        Rule ry = sphere_rule(sig.q, ny);
        GegenbauerOrder gx{static_cast<unsigned>(mu), (sig.p - 2) / 2.0};
        GegenbauerOrder gy{static_cast<unsigned>(lambda),
                           (sig.q - 2) / 2.0};
        std::vector<double> cx(rx.cosv.size()), cy(ry.cosv.size());
        for (std::size_t i = 0; i < cx.size(); ++i)
            cx[i] = gegenbauer(gx, rx.cosv[i]);
        for (std::size_t j = 0; j < cy.size(); ++j)
            cy[j] = gegenbauer(gy, ry.cosv[j]);
        Complex val = integrate2(rx, ry, [&](std::size_t i, std::size_t j) {
            return theta_pow(sigma, th(rx.cosv[i], ry.cosv[j])) * cx[i]
                   * cy[j];
        });
        return assoc_pair_coeff(sig, static_cast<unsigned>(lambda),
                                static_cast<unsigned>(mu))
               * val;
    }
    if (sig.p >= 3) { // q == 2
        if (mu < 0)
            throw std::domain_error("quad_assoc: mu must be >= 0 for q=2");
        Rule rx = sphere_rule(sig.p, nx);
        Rule ry = circle_rule(ny);
        GegenbauerOrder gx{static_cast<unsigned>(mu), (sig.p - 2) / 2.0};
        std::vector<double> cx(rx.cosv.size());
        for (std::size_t i = 0; i < cx.size(); ++i)
            cx[i] = gegenbauer(gx, rx.cosv[i]);
        Complex val = integrate2(rx, ry, [&](std::size_t i, std::size_t j) {
            return theta_pow(sigma, th(rx.cosv[i], ry.cosv[j])) * cx[i]
                   * std::exp(mi * (static_cast<double>(lambda)
                                    * ry.angle[j]));
        });
        return assoc_coeff(sig.p, static_cast<unsigned>(mu)) * val;
    }
    // p = q = 2
    Rule rx = circle_rule(nx);
    Rule ry = circle_rule(ny);
    Complex val = integrate2(rx, ry, [&](std::size_t i, std::size_t j) {
        return theta_pow(sigma, th(rx.cosv[i], ry.cosv[j]))
               * std::exp(mi * (static_cast<double>(lambda) * ry.angle[j]
                                + static_cast<double>(mu) * rx.angle[i]));
    });
    return val / (4.0 * kPi * kPi);
}

void doubling_check(const Complex& coarse, const Complex& fine,
                    double check_tol)
{
    double scale = std::max(std::abs(fine), 1e-12);
    if (std::abs(coarse - fine) > check_tol * scale)
        throw convergence_error(
            "quadrature did not stabilize under node doubling");
}

} // namespace

QuadratureConfig QuadratureConfig::for_signature(const Signature& sig,
                                                 int nodes)
{
    validate_signature(sig);
    QuadratureConfig cfg;
    cfg.nodes_x = nodes;
    cfg.nodes_y = nodes;
    cfg.scheme = (sig.q == 2) ? Scheme::trapezoid_periodic
                              : Scheme::gauss_legendre_angle;
    return cfg;
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights)
{
    if (n < 1)
        throw std::domain_error("gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, Newton refinement on P_n.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15)
                break;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

Complex quad_zonal(const Signature& sig, const RepParam& rep,
                   const Rapidity& alpha, const QuadratureConfig& cfg,
                   double check_tol)
{
    validate_signature(sig);
    if (rep.epsilon != 0)
        throw std::domain_error("quad_zonal: requires epsilon = 0");
    check_scheme(sig, cfg);
    Complex fine = quad_zonal_once(sig, rep, alpha.alpha, cfg.nodes_x,
                                   cfg.nodes_y, cfg.scheme);
    if (check_tol > 0.0) {
        Complex finer =
            quad_zonal_once(sig, rep, alpha.alpha, 2 * cfg.nodes_x,
                            2 * cfg.nodes_y, cfg.scheme);
        doubling_check(fine, finer, check_tol);
        return finer;
    }
    return fine;
}

Complex quad_assoc_labels(const Signature& sig, const RepParam& rep,
                          int lambda, int mu, const Rapidity& alpha,
                          const QuadratureConfig& cfg, double check_tol)
{
    validate_signature(sig);
    if (sig.q < 2)
        throw std::domain_error("quad_assoc: requires q >= 2");
    if (rep.epsilon != 0)
        throw std::domain_error("quad_assoc: requires epsilon = 0");
    check_scheme(sig, cfg);
    Complex fine = quad_assoc_once(sig, rep, lambda, mu, alpha.alpha,
                                   cfg.nodes_x, cfg.nodes_y);
    if (check_tol > 0.0) {
        Complex finer = quad_assoc_once(sig, rep, lambda, mu, alpha.alpha,
                                        2 * cfg.nodes_x, 2 * cfg.nodes_y);
        doubling_check(fine, finer, check_tol);
        return finer;
    }
    return fine;
}

Complex quad_assoc(const Signature& sig, const RepParam& rep,
                   const AssocIndex& idx, const Rapidity& alpha,
                   const QuadratureConfig& cfg, double check_tol)
{
    if (idx.nu != 0 && idx.nu != 1)
        throw std::domain_error("quad_assoc: nu must be 0 or 1");
    if (idx.s < 0 || idx.r < 0)
        throw std::domain_error("quad_assoc: s, r must be >= 0");
    return quad_assoc_labels(sig, rep, idx.nu + 2 * idx.r,
                             idx.nu + 2 * idx.s, alpha, cfg, check_tol);
}

std::vector<std::vector<Complex>> gram_matrix(
    const Signature& sig, const std::vector<BasisLabel>& labels,
    const QuadratureConfig& cfg)
{
    validate_signature(sig);
    if (sig.q < 2)
        throw std::domain_error("gram_matrix: requires q >= 2");
    check_scheme(sig, cfg);
    Rule rx = (sig.p >= 3) ? sphere_rule(sig.p, cfg.nodes_x)
                           : circle_rule(cfg.nodes_x);
    Rule ry = (sig.q >= 3) ? sphere_rule(sig.q, cfg.nodes_y)
                           : circle_rule(cfg.nodes_y);
    const std::size_t n = labels.size();
    const std::size_t nx = rx.angle.size(), ny = ry.angle.size();
    const Complex im(0.0, 1.0);

    // Tabulate each basis element on the node grid.
    std::vector<std::vector<Complex>> psi(n);
    for (std::size_t k = 0; k < n; ++k) {
        const BasisLabel& lb = labels[k];
        psi[k].resize(nx * ny);
        if (sig.q >= 3) {
            if (lb.lam < 0 || lb.mu < 0)
                throw std::domain_error(
                    "gram_matrix: labels must be >= 0 for q >= 3");
            double c = basis_norm_general(sig,
                                          static_cast<unsigned>(lb.lam), 0,
                                          static_cast<unsigned>(lb.mu), 0);
            GegenbauerOrder gx{static_cast<unsigned>(lb.mu),
                               (sig.p - 2) / 2.0};
            GegenbauerOrder gy{static_cast<unsigned>(lb.lam),
                               (sig.q - 2) / 2.0};
            for (std::size_t j = 0; j < ny; ++j)
                for (std::size_t i = 0; i < nx; ++i)
                    psi[k][j * nx + i] = c * gegenbauer(gx, rx.cosv[i])
                                         * gegenbauer(gy, ry.cosv[j]);
        } else if (sig.p >= 3) { // q == 2, Fourier label lam in Z
            if (lb.mu < 0)
                throw std::domain_error(
                    "gram_matrix: mu must be >= 0 for q = 2");
            double c = basis_norm_q2(sig.p, static_cast<unsigned>(lb.mu), 0);
            GegenbauerOrder gx{static_cast<unsigned>(lb.mu),
                               (sig.p - 2) / 2.0};
            for (std::size_t j = 0; j < ny; ++j) {
                Complex e = std::exp(im * (static_cast<double>(lb.lam)
                                           * ry.angle[j]));
                for (std::size_t i = 0; i < nx; ++i)
                    psi[k][j * nx + i] = c * gegenbauer(gx, rx.cosv[i]) * e;
            }
        } else { // p = q = 2, both labels in Z
            for (std::size_t j = 0; j < ny; ++j)
                for (std::size_t i = 0; i < nx; ++i)
                    psi[k][j * nx + i] =
                        std::exp(im * (static_cast<double>(lb.lam)
                                           * ry.angle[j]
                                       + static_cast<double>(lb.mu)
                                             * rx.angle[i]))
                        / (2.0 * kPi);
        }
    }

    std::vector<std::vector<Complex>> g(n, std::vector<Complex>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Complex acc(0.0, 0.0);
            for (std::size_t j = 0; j < ny; ++j) {
                Complex row(0.0, 0.0);
                for (std::size_t i = 0; i < nx; ++i)
                    row += rx.weight[i] * psi[k][j * nx + i]
                           * std::conj(psi[l][j * nx + i]);
                acc += ry.weight[j] * row;
            }
            g[k][l] = acc;
        }
    return g;
}

double expansion_residual(const Signature& sig, const RepParam& rep,
                          const Rapidity& alpha, int N,
                          const std::vector<std::pair<double, double>>&
                              samples)
{
    validate_signature(sig);
    if (sig.q < 2)
        throw std::domain_error("expansion_residual: requires q >= 2");
    if (!(rep.sigma.real() >= 2.0))
        throw std::domain_error(
            "expansion_residual: requires Re sigma >= 2 (pointwise "
            "convergence regime)");
    if (N < 0)
        throw std::domain_error("expansion_residual: N must be >= 0");

    // Coefficient cache over non-negative label pairs (the Fourier-label
    // coefficients are even in each label because Theta is even in phi).
    std::vector<std::vector<Complex>> coeff(
        N + 1, std::vector<Complex>(N + 1, Complex(0.0, 0.0)));
    for (int lam = 0; lam <= N; ++lam)
        for (int mu = 0; mu <= N; ++mu) {
            if ((lam + mu) % 2 != 0)
                continue;
            int nu = lam % 2;
            AssocIndex idx{nu, (mu - nu) / 2, (lam - nu) / 2};
            coeff[lam][mu] =
                assoc_series(sig, rep, idx, alpha, 1e-13).value;
        }

    const Complex im(0.0, 1.0);
    double residual = 0.0;
    for (const auto& [phi, chi] : samples) {
        double x = std::cos(chi), y = std::cos(phi);
        double thv = theta(alpha, x, y);
        Complex target = std::exp((rep.sigma / 2.0) * std::log(thv));
        Complex s(0.0, 0.0);
        if (sig.q >= 3) {
            double pref = kPi
                          * gamma_ratio({Complex((sig.p - 1) / 2.0),
                                         Complex((sig.q - 1) / 2.0)},
                                        {Complex(sig.p / 2.0),
                                         Complex(sig.q / 2.0)})
                                .real();
            for (int lam = 0; lam <= N; ++lam)
                for (int mu = (lam % 2); mu <= N; mu += 2)
                    s += assoc_pair_coeff(sig, lam, mu) * coeff[lam][mu]
                         * gegenbauer({static_cast<unsigned>(mu),
                                       (sig.p - 2) / 2.0},
                                      x)
                         * gegenbauer({static_cast<unsigned>(lam),
                                       (sig.q - 2) / 2.0},
                                      y);
            s *= pref;
        } else if (sig.p >= 3) { // q = 2
            double pref = 2.0 * std::pow(kPi, 1.5)
                          * gamma_ratio({Complex((sig.p - 1) / 2.0)},
                                        {Complex(sig.p / 2.0)})
                                .real();
            for (int lam = -N; lam <= N; ++lam)
                for (int mu = (std::abs(lam) % 2); mu <= N; mu += 2)
                    s += assoc_coeff(sig.p, mu) * coeff[std::abs(lam)][mu]
                         * gegenbauer({static_cast<unsigned>(mu),
                                       (sig.p - 2) / 2.0},
                                      x)
                         * std::exp(im * (static_cast<double>(lam) * phi));
            s *= pref;
        } else { // p = q = 2
            for (int lam = -N; lam <= N; ++lam)
                for (int mu = -N; mu <= N; ++mu) {
                    if ((lam + mu) % 2 != 0)
                        continue;
                    s += coeff[std::abs(lam)][std::abs(mu)]
                         * std::exp(im * (static_cast<double>(lam) * phi
                                          + static_cast<double>(mu) * chi));
                }
        }
        residual = std::max(residual, std::abs(target - s));
    }
    return residual;
}

} // namespace sopq
