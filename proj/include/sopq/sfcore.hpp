#ifndef SOPQ_SFCORE_HPP
#define SOPQ_SFCORE_HPP

// Core results: the Theta kernel, zonal spherical functions (series and
// compact Horn form), associated spherical functions, the p<->q symmetry
// and the unitary-equivalence pairing.

#include "sopq/hyper.hpp"
#include "sopq/orthopoly.hpp"

namespace sopq {

// Representation parameter: complex degree sigma and parity epsilon.
// The principal unitary series sits on Re sigma = -(p+q-2)/2; any complex
// sigma is accepted and is_principal_unitary reports whether the condition
// holds.
struct RepParam {
    Complex sigma{0.0, 0.0};
    int epsilon = 0; // 0 or 1
};

bool is_principal_unitary(const Signature& sig, const RepParam& rep,
                          double tol = 1e-12);

// Index triple (nu, s, r) of an associated function; the basis labels are
// lambda = nu + 2r (q side) and mu = nu + 2s (p side), so lambda + mu is
// automatically even.
struct AssocIndex {
    int nu = 0; // 0 or 1
    int s = 0;
    int r = 0;
};

// Hyperbolic rotation angle, alpha >= 0.
struct Rapidity {
    double alpha = 0.0;
};

// Default hard limit on th^2(alpha) for the series paths; strictly inside
// the sufficient convergence domain ch(2 alpha) < 3 (th^2 = 1/2).  Callers
// may override up to th^2 < 1, with converged=false reported honestly when
// the budget runs out.
inline constexpr double kDefaultGuard = 0.49;

// Theta = 1 + (x^2+y^2) sh^2(a) - 2 x y sh(a) ch(a); strictly positive on
// the square |x|,|y| <= 1 (it equals the angular form below, a sum of
// squares that cannot vanish).  Throws std::domain_error outside the square.
double theta(const Rapidity& alpha, double x, double y);

// Equivalent angular form (cos(phi) ch(a) - cos(chi) sh(a))^2 + sin^2(phi),
// with x = cos(chi), y = cos(phi).
double theta_angular(const Rapidity& alpha, double chi, double phi);

// Zonal spherical function by the hypergeometric series
//   Z = (1/ch a) sum_l ((1/2)_l / l!) F2(-sigma/2,-l,-l;p/2,q/2;1,1)
//       th^{2l}(a).
// Valid for q >= 1.  Requires epsilon = 0 (std::domain_error otherwise)
// and th^2(a) <= guard (convergence_error otherwise).  tail_estimate is
// relative to the returned value.
SeriesResult zonal_series(const Signature& sig, const RepParam& rep,
                          const Rapidity& alpha, double tol = 1e-12,
                          unsigned max_l = 400,
                          double guard = kDefaultGuard);

// The compact two-variable Horn form of the zonal function, evaluated at
// args (th^2 a, th^2 a) and scaled by 1/ch a.
SeriesResult zonal_horn(const Signature& sig, const RepParam& rep,
                        const Rapidity& alpha, double tol = 1e-12,
                        double guard = kDefaultGuard);

// The Horn spec used by zonal_horn (exposed for validation tests).
HornSeriesSpec zonal_horn_spec(const Signature& sig, const RepParam& rep,
                               const Rapidity& alpha);

// Associated spherical function by the series
//   ((-1)^{s+r}/ch a) A1 A2 sum_{l >= max(s,r)}
//       [l! (nu+1/2)_l / ((l-s)!(l-r)!)]
//       F2(s+r+nu-sigma/2, s-l, r-l; 2s+nu+p/2, 2r+nu+q/2; 1,1)
//       th^{2l+nu}(a),
// with the constant blocks A1, A2 as validated against the integral
// representations (see ERRATA.md for the corrections to the printed
// source formulas).  Requires p >= q >= 2 and epsilon = 0.
SeriesResult assoc_series(const Signature& sig, const RepParam& rep,
                          const AssocIndex& idx, const Rapidity& alpha,
                          double tol = 1e-12, unsigned max_l = 400,
                          double guard = kDefaultGuard);

// Compact Horn form of the associated function; for s < r the p<->q, s<->r
// rearrangement is applied first (the compact form itself needs s >= r).
SeriesResult assoc_horn(const Signature& sig, const RepParam& rep,
                        const AssocIndex& idx, const Rapidity& alpha,
                        double tol = 1e-12, double guard = kDefaultGuard);

// The Horn spec used by assoc_horn (exposed for validation tests); applies
// the same s < r rearrangement as assoc_horn.
HornSeriesSpec assoc_horn_spec(const Signature& sig, const RepParam& rep,
                               const AssocIndex& idx, const Rapidity& alpha);

// |P^{pq,nu}_{sigma,s,r} - P^{qp,nu}_{sigma,r,s}| by two independent
// series evaluations (absolute difference).
double symmetry_check(const Signature& sig, const RepParam& rep,
                      const AssocIndex& idx, const Rapidity& alpha);

// |Z_sigma - Z_{2-p-q-sigma}|; on the principal unitary line the pair is
// (sigma, conj(sigma)) so this doubles as a realness test.
double unitary_pair_check(const Signature& sig, const RepParam& rep,
                          const Rapidity& alpha);

} // namespace sopq

#endif
