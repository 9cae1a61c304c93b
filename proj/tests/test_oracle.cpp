#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sopq/oracle.hpp"

#include <cmath>

using namespace sopq;

namespace {
double rel_err(const Complex& a, const Complex& b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
}
} // namespace

TEST_CASE("gauss_legendre integrates polynomials exactly")
{
    std::vector<double> x, w;
    gauss_legendre(12, x, w);
    // degree 23 and below exact: check x^8 and x^14
    double s8 = 0.0, s14 = 0.0, s0 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s0 += w[i];
        s8 += w[i] * std::pow(x[i], 8);
        s14 += w[i] * std::pow(x[i], 14);
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
    CHECK(s14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("quad_zonal trivial normalizations")
{
    for (auto sig : {Signature{3, 3}, Signature{3, 2}, Signature{2, 2},
                     Signature{4, 1}}) {
        QuadratureConfig cfg = QuadratureConfig::for_signature(sig, 48);
        CHECK(std::abs(quad_zonal(sig, {Complex(-2.1, 0.7), 0}, {0.0}, cfg)
                       - Complex(1.0))
              < 1e-12);
        CHECK(std::abs(quad_zonal(sig, {Complex(0.0), 0}, {0.9}, cfg)
                       - Complex(1.0))
              < 1e-12);
    }
}

TEST_CASE("quad_zonal matches the series on mixed signatures")
{
    struct Pt {
        Signature sig;
        Complex sigma;
        double alpha;
    };
    for (const Pt& pt : {Pt{{3, 2}, Complex(-1.5, 2.0), 0.4},
                         Pt{{4, 3}, Complex(-2.5, 0.0), 0.3},
                         Pt{{5, 5}, Complex(-4.0, 2.0), 0.7},
                         Pt{{2, 2}, Complex(-1.0, 1.0), 0.5},
                         Pt{{3, 1}, Complex(-1.5, 0.0), 0.7}}) {
        QuadratureConfig cfg = QuadratureConfig::for_signature(pt.sig);
        Complex q = quad_zonal(pt.sig, {pt.sigma, 0}, {pt.alpha}, cfg);
        Complex s =
            zonal_series(pt.sig, {pt.sigma, 0}, {pt.alpha}).value;
        CHECK(rel_err(q, s) < 1e-9);
    }
    // oracle works beyond the series guard
    QuadratureConfig cfg = QuadratureConfig::for_signature({3, 2});
    Complex far = quad_zonal({3, 2}, {Complex(-1.5), 0}, {1.2}, cfg, 1e-9);
    CHECK(std::isfinite(far.real()));
}

TEST_CASE("node-doubling stability check")
{
    QuadratureConfig cfg = QuadratureConfig::for_signature({4, 3});
    CHECK_NOTHROW(
        quad_zonal({4, 3}, {Complex(-2.5, 1.0), 0}, {0.6}, cfg, 1e-9));
    QuadratureConfig tiny = QuadratureConfig::for_signature({4, 3}, 4);
    CHECK_THROWS_AS(
        quad_zonal({4, 3}, {Complex(-2.5, 1.0), 0}, {0.6}, tiny, 1e-12),
        convergence_error);
}

TEST_CASE("quadrature scheme must match the signature")
{
    QuadratureConfig cfg = QuadratureConfig::for_signature({3, 3});
    cfg.scheme = Scheme::trapezoid_periodic;
    CHECK_THROWS_AS(quad_zonal({3, 3}, {Complex(-1.0), 0}, {0.3}, cfg),
                    std::domain_error);
}

TEST_CASE("quad_assoc parity zeros and alpha=0 orthogonality")
{
    QuadratureConfig cfg = QuadratureConfig::for_signature({3, 2});
    // odd lambda+mu: integrand odd under joint sign flip of (x, y)
    CHECK(std::abs(quad_assoc_labels({3, 2}, {Complex(-2.0), 0}, 1, 2,
                                     {0.4}, cfg))
          < 1e-10);
    // alpha = 0: Theta == 1 is orthogonal to nonconstant basis elements
    CHECK(std::abs(quad_assoc({3, 2}, {Complex(-2.0), 0}, {0, 1, 1}, {0.0},
                              cfg))
          < 1e-12);
}

TEST_CASE("quad_assoc matches assoc_series at frozen points")
{
    {
        QuadratureConfig cfg = QuadratureConfig::for_signature({3, 3});
        Complex q = quad_assoc({3, 3}, {Complex(-2.0, 1.0), 0}, {0, 1, 1},
                               {0.3}, cfg);
        CHECK(q.real()
              == doctest::Approx(0.026936169272850001222).epsilon(1e-10));
        CHECK(q.imag()
              == doctest::Approx(-0.023088145091014286762).epsilon(1e-10));
    }
    {
        QuadratureConfig cfg = QuadratureConfig::for_signature({3, 2});
        Complex q = quad_assoc({3, 2}, {Complex(-2.0, 1.0), 0}, {1, 0, 1},
                               {0.2}, cfg);
        Complex s = assoc_series({3, 2}, {Complex(-2.0, 1.0), 0},
                                 {1, 0, 1}, {0.2})
                        .value;
        CHECK(rel_err(q, s) < 1e-8);
    }
    {
        QuadratureConfig cfg = QuadratureConfig::for_signature({2, 2});
        Complex q = quad_assoc({2, 2}, {Complex(4.0), 0}, {0, 1, 0}, {0.3},
                               cfg);
        CHECK(q.real()
              == doctest::Approx(0.10133194591554684914).epsilon(1e-10));
    }
}

TEST_CASE("quad_assoc (0,0,0) proportional to quad_zonal, ratio fixed")
{
    Signature sig{4, 3};
    QuadratureConfig cfg = QuadratureConfig::for_signature(sig);
    RepParam rep{Complex(-2.2, 0.9), 0};
    Complex r1 = quad_assoc(sig, rep, {0, 0, 0}, {0.25}, cfg)
                 / quad_zonal(sig, rep, {0.25}, cfg);
    Complex r2 = quad_assoc(sig, rep, {0, 0, 0}, {0.7}, cfg)
                 / quad_zonal(sig, rep, {0.7}, cfg);
    CHECK(rel_err(r1, r2) < 1e-8);
}

TEST_CASE("negative Fourier label symmetry for q = 2")
{
    QuadratureConfig cfg = QuadratureConfig::for_signature({4, 2});
    Complex a = quad_assoc_labels({4, 2}, {Complex(-2.5), 0}, 2, 2, {0.35},
                                  cfg);
    Complex b = quad_assoc_labels({4, 2}, {Complex(-2.5), 0}, -2, 2, {0.35},
                                  cfg);
    CHECK(rel_err(a, b) < 1e-12);
}

TEST_CASE("gram_matrix is the identity for all three basis families")
{
    auto check_identity = [](const std::vector<std::vector<Complex>>& g,
                             double dtol, double otol) {
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (i == j)
                    CHECK(std::abs(g[i][j] - Complex(1.0)) < dtol);
                else
                    CHECK(std::abs(g[i][j]) < otol);
            }
    };
    {
        std::vector<BasisLabel> labels;
        for (int lam = 0; lam <= 3; ++lam)
            for (int mu = 0; mu <= 3; ++mu)
                labels.push_back({lam, mu});
        QuadratureConfig cfg = QuadratureConfig::for_signature({3, 3}, 48);
        check_identity(gram_matrix({3, 3}, labels, cfg), 1e-6, 1e-8);
    }
    {
        std::vector<BasisLabel> labels;
        for (int lam = -3; lam <= 3; ++lam)
            for (int mu = 0; mu <= 2; ++mu)
                labels.push_back({lam, mu});
        QuadratureConfig cfg = QuadratureConfig::for_signature({3, 2}, 48);
        check_identity(gram_matrix({3, 2}, labels, cfg), 1e-6, 1e-8);
    }
    {
        std::vector<BasisLabel> labels;
        for (int lam = -3; lam <= 3; ++lam)
            for (int mu = -3; mu <= 3; ++mu)
                labels.push_back({lam, mu});
        QuadratureConfig cfg = QuadratureConfig::for_signature({2, 2}, 48);
        check_identity(gram_matrix({2, 2}, labels, cfg), 1e-12, 1e-12);
    }
}

TEST_CASE("expansion_residual: trivial cases and N-trend")
{
    std::vector<std::pair<double, double>> samples{
        {0.3, 1.1}, {2.0, 0.7}, {5.1, 4.4}};
    // sigma = 0 and alpha = 0: the (0,0) term alone reconstructs exactly
    CHECK(expansion_residual({2, 2}, {Complex(2.0), 0}, {0.0}, 0, samples)
          < 1e-12);
    // pointwise reconstruction for each signature family at small N
    CHECK(expansion_residual({2, 2}, {Complex(4.0), 0}, {0.3}, 4, samples)
          < 1e-10);
    CHECK(expansion_residual({3, 3}, {Complex(4.0), 0}, {0.3}, 4, samples)
          < 1e-10);
    CHECK(expansion_residual({3, 2}, {Complex(4.0), 0}, {0.3}, 4, samples)
          < 1e-10);
    // residual decreases with N for non-integer sigma/2 (non-terminating)
    double r2 = expansion_residual({2, 2}, {Complex(3.0), 0}, {0.3}, 2,
                                   samples);
    double r4 = expansion_residual({2, 2}, {Complex(3.0), 0}, {0.3}, 4,
                                   samples);
    double r8 = expansion_residual({2, 2}, {Complex(3.0), 0}, {0.3}, 8,
                                   samples);
    CHECK(r4 < r2);
    CHECK(r8 < r4);
    // precondition Re sigma >= 2
    CHECK_THROWS_AS(expansion_residual({2, 2}, {Complex(1.0), 0}, {0.3}, 4,
                                       samples),
                    std::domain_error);
}
