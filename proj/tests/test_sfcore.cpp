#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sopq/sfcore.hpp"

#include <cmath>
#include <random>

using namespace sopq;

namespace {
double rel_err(const Complex& a, const Complex& b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
}
} // namespace

TEST_CASE("theta: two printed forms agree, positivity, domain")
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ang(0.0, 3.14159265358979);
    std::uniform_real_distribution<double> al(0.0, 2.0);
    for (int i = 0; i < 300; ++i) {
        double chi = ang(rng), phi = ang(rng), a = al(rng);
        double t1 = theta({a}, std::cos(chi), std::cos(phi));
        double t2 = theta_angular({a}, chi, phi);
        CHECK(t1 > 0.0);
        CHECK(std::abs(t1 - t2) <= 1e-13 * std::max(t1, 1.0));
    }
    CHECK(theta({0.0}, 0.4, -0.9) == 1.0);
    CHECK(theta({1.7}, 0.0, 0.0) == 1.0);
    CHECK(theta({0.5}, 0.3, -0.7)
          == doctest::Approx(1.4042856347616190017).epsilon(1e-14));
    CHECK_THROWS_AS(theta({0.5}, 1.2, 0.0), std::domain_error);
}

TEST_CASE("zonal_series identities")
{
    for (int p = 2; p <= 6; ++p)
        for (int q = 1; q <= p; ++q)
            for (double a : {0.0, 0.2, 0.5, 0.75}) {
                SeriesResult r = zonal_series({p, q}, {Complex(0.0), 0},
                                              {a});
                CHECK(r.converged);
                CHECK(std::abs(r.value - Complex(1.0)) < 1e-12);
            }
    // alpha = 0: single-term path, exact
    SeriesResult r0 = zonal_series({4, 3}, {Complex(-2.5, 1.0), 0}, {0.0});
    CHECK(r0.value == Complex(1.0));
}

TEST_CASE("zonal_series frozen references")
{
    Complex z1 = zonal_series({3, 2}, {Complex(-1.5, 2.0), 0}, {0.4}).value;
    CHECK(z1.real()
          == doctest::Approx(0.92023825158442389936).epsilon(1e-12));
    CHECK(std::abs(z1.imag()) < 1e-12); // principal line: real value

    Complex z2 = zonal_series({4, 3}, {Complex(-2.5), 0}, {0.3}).value;
    CHECK(z2.real()
          == doctest::Approx(0.97692251236516576761).epsilon(1e-12));

    Complex z3 = zonal_series({5, 5}, {Complex(-4.0, 2.0), 0}, {0.8}).value;
    CHECK(z3.real()
          == doctest::Approx(0.78370834527167263198).epsilon(1e-11));

    // q = 1 extension
    Complex z4 = zonal_series({3, 1}, {Complex(-1.5), 0}, {0.7}).value;
    CHECK(z4.real()
          == doctest::Approx(0.94172792948517577755).epsilon(1e-12));
}

TEST_CASE("zonal parity and guard errors")
{
    CHECK_THROWS_AS(zonal_series({3, 2}, {Complex(-1.0), 1}, {0.3}),
                    std::domain_error);
    // th^2(1.0) = 0.58 > 0.49 default guard
    CHECK_THROWS_AS(zonal_series({3, 2}, {Complex(-1.0), 0}, {1.0}),
                    convergence_error);
    // guard override up to th^2 < 1 is honoured
    SeriesResult r = zonal_series({3, 2}, {Complex(-1.0), 0}, {1.0}, 1e-12,
                                  400, 0.80);
    CHECK(r.converged);
}

TEST_CASE("zonal_horn cross-path and spec balance")
{
    CHECK(horn_validate(zonal_horn_spec({4, 3}, {Complex(-2.5), 0}, {0.3})));
    for (int p : {2, 3, 4, 5})
        for (int q = 1; q <= p; ++q)
            for (double a : {0.15, 0.45, 0.7}) {
                RepParam rep{Complex(-1.3, 0.9), 0};
                Complex zs = zonal_series({p, q}, rep, {a}).value;
                Complex zh = zonal_horn({p, q}, rep, {a}).value;
                CHECK(rel_err(zs, zh) < 1e-9);
            }
    CHECK(std::abs(zonal_horn({3, 2}, {Complex(0.0), 0}, {0.5}).value
                   - Complex(1.0))
          < 1e-12);
}

TEST_CASE("assoc_series frozen references")
{
    Complex a1 = assoc_series({3, 3}, {Complex(-2.0, 1.0), 0}, {0, 1, 1},
                              {0.3})
                     .value;
    CHECK(a1.real()
          == doctest::Approx(0.026936169272850001222).epsilon(1e-11));
    CHECK(a1.imag()
          == doctest::Approx(-0.023088145091014286762).epsilon(1e-11));

    Complex a2 = assoc_series({3, 2}, {Complex(-2.0, 1.0), 0}, {1, 0, 1},
                              {0.2})
                     .value;
    CHECK(a2.real()
          == doctest::Approx(0.000055536222949026941311).epsilon(1e-10));
    CHECK(a2.imag()
          == doctest::Approx(-0.00073923513787568589694).epsilon(1e-10));

    Complex a3 = assoc_series({4, 3}, {Complex(-3.0), 0}, {0, 2, 1}, {0.3})
                     .value;
    CHECK(a3.real()
          == doctest::Approx(0.0010743702524478741927).epsilon(1e-11));

    Complex a4 = assoc_series({2, 2}, {Complex(4.0), 0}, {0, 1, 0}, {0.3})
                     .value;
    CHECK(a4.real()
          == doctest::Approx(0.10133194591554684914).epsilon(1e-12));
}

TEST_CASE("assoc_series identities")
{
    // alpha = 0 vanishing for non-trivial indices
    for (auto [nu, s, r] : {std::array<int, 3>{0, 1, 0},
                            std::array<int, 3>{1, 0, 0},
                            std::array<int, 3>{1, 2, 1}}) {
        Complex v = assoc_series({4, 3}, {Complex(-2.0, 0.7), 0},
                                 {nu, s, r}, {0.0})
                        .value;
        CHECK(std::abs(v) < 1e-12);
    }
    // (0,0,0) is proportional to the zonal function, ratio alpha-independent
    RepParam rep{Complex(-2.3, 1.1), 0};
    Complex r1 = assoc_series({4, 3}, rep, {0, 0, 0}, {0.2}).value
                 / zonal_series({4, 3}, rep, {0.2}).value;
    Complex r2 = assoc_series({4, 3}, rep, {0, 0, 0}, {0.6}).value
                 / zonal_series({4, 3}, rep, {0.6}).value;
    CHECK(rel_err(r1, r2) < 1e-10);
    // real sigma gives a real function
    Complex v = assoc_series({3, 3}, {Complex(-3.5), 0}, {1, 1, 0}, {0.4})
                    .value;
    CHECK(std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v)));
}

TEST_CASE("assoc_horn cross-path, including the s<r rearrangement")
{
    RepParam rep{Complex(-1.8, 0.6), 0};
    for (auto [nu, s, r] : {std::array<int, 3>{0, 0, 0},
                            std::array<int, 3>{0, 2, 1},
                            std::array<int, 3>{0, 1, 2},
                            std::array<int, 3>{1, 0, 1},
                            std::array<int, 3>{1, 2, 0}})
        for (double a : {0.2, 0.55}) {
            Complex vs = assoc_series({4, 3}, rep, {nu, s, r}, {a}).value;
            Complex vh = assoc_horn({4, 3}, rep, {nu, s, r}, {a}).value;
            CHECK(rel_err(vs, vh) < 1e-9);
        }
}

TEST_CASE("symmetry and unitary pair checks")
{
    CHECK(symmetry_check({4, 3}, {Complex(-3.0), 0}, {0, 2, 1}, {0.3})
          < 1e-12);
    CHECK(symmetry_check({3, 2}, {Complex(-2.0, 1.0), 0}, {1, 0, 1}, {0.2})
          < 1e-12);
    CHECK(symmetry_check({3, 3}, {Complex(-2.0, 1.0), 0}, {0, 1, 1}, {0.3})
          == 0.0); // p=q, s=r: identical call

    // on the principal line the pair is (sigma, conj sigma)
    CHECK(unitary_pair_check({3, 2}, {Complex(-1.5, 2.0), 0}, {0.4})
          < 1e-9);
    CHECK(unitary_pair_check({5, 4}, {Complex(-3.5, 1.0), 0}, {0.6})
          < 1e-9);
    CHECK(is_principal_unitary({3, 2}, {Complex(-1.5, 2.0), 0}));
    CHECK_FALSE(is_principal_unitary({3, 2}, {Complex(-1.0), 0}));
    // off-line probe, informational: observed equal as well
    CHECK(unitary_pair_check({3, 2}, {Complex(0.0), 0}, {0.5}) < 1e-10);
}

TEST_CASE("geometric shell decay of the l-sum on the admissible grid")
{
    // terms decay geometrically after l >= max(s,r) + 5: the achieved
    // tail estimates at convergence are tiny
    SeriesResult r =
        assoc_series({3, 3}, {Complex(-2.0, 1.0), 0}, {0, 2, 2}, {0.7});
    CHECK(r.converged);
    CHECK(r.tail_estimate <= 1e-12);
}
