#ifndef SOPQ_ORACLE_HPP
#define SOPQ_ORACLE_HPP

// Independent ground truth: direct quadrature of the integral
// representations of the zonal and associated functions, Gram matrices of
// the canonical basis, and pointwise reconstruction of Theta^{sigma/2}
// from its expansion.

#include "sopq/sfcore.hpp"

#include <utility>
#include <vector>

namespace sopq {

enum class Scheme {
    gauss_legendre_angle, // Gauss-Legendre in the angle on [0, pi]
    trapezoid_periodic    // trapezoid on [0, 2 pi] (periodic directions)
};

// Node counts and the scheme of the phi direction.  The chi direction is
// Gauss-Legendre whenever p >= 3 and periodic-trapezoid for p = 2; the phi
// scheme must match the signature (trapezoid_periodic only for the angular
// q = 2 / p = q = 2 coordinates) and for_signature() picks it correctly.
struct QuadratureConfig {
    int nodes_x = 96; // chi direction
    int nodes_y = 96; // phi direction
    Scheme scheme = Scheme::gauss_legendre_angle;

    static QuadratureConfig for_signature(const Signature& sig,
                                          int nodes = 96);
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Zonal function by quadrature of Theta^{sigma/2} against the invariant
// measure, normalized so the alpha = 0 value is exactly 1.  Valid for any
// alpha >= 0 (no series convergence restriction) and q >= 1 (the q = 1
// measure degenerates to the two-point measure y = +-1 with weights 1/2;
// see docs/q1-derivation.md).  If check_tol > 0 the integral is recomputed
// with doubled nodes and a convergence_error is thrown when the two values
// differ by more than check_tol relative.
Complex quad_zonal(const Signature& sig, const RepParam& rep,
                   const Rapidity& alpha, const QuadratureConfig& cfg,
                   double check_tol = 0.0);

// Associated function by quadrature with the basis integrands and the
// pair coefficients; labels lambda = nu+2r, mu = nu+2s.
Complex quad_assoc(const Signature& sig, const RepParam& rep,
                   const AssocIndex& idx, const Rapidity& alpha,
                   const QuadratureConfig& cfg, double check_tol = 0.0);

// Same integral with raw integer labels; Fourier labels (lambda for q = 2,
// both for p = q = 2) may be negative.
Complex quad_assoc_labels(const Signature& sig, const RepParam& rep,
                          int lambda, int mu, const Rapidity& alpha,
                          const QuadratureConfig& cfg,
                          double check_tol = 0.0);

// Basis label pair; the multi-index towers are fixed to their trivial
// (l = m = 0) component.
struct BasisLabel {
    int lam = 0;
    int mu = 0;
};

// Pairwise scalar products of canonical basis elements; the contract is
// the identity matrix.
std::vector<std::vector<Complex>> gram_matrix(
    const Signature& sig, const std::vector<BasisLabel>& labels,
    const QuadratureConfig& cfg);

// Max over the sample angle pairs (phi, chi) of
// |Theta^{sigma/2} - partial expansion over lambda+mu even, |labels| <= N|
// with assoc_series coefficients.  Requires Re sigma >= 2 (pointwise
// convergence regime).
double expansion_residual(const Signature& sig, const RepParam& rep,
                          const Rapidity& alpha, int N,
                          const std::vector<std::pair<double, double>>&
                              samples);

} // namespace sopq

#endif
