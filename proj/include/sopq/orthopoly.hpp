#ifndef SOPQ_ORTHOPOLY_HPP
#define SOPQ_ORTHOPOLY_HPP

// Gegenbauer polynomials and the normalization constants of the canonical
// basis and of the associated-function integrands.

#include "sopq/scalar.hpp"

namespace sopq {

struct GegenbauerOrder {
    unsigned n = 0;   // degree
    double lam = 0.5; // superscript parameter, > -1/2 and != 0
};

// Group signature (p,q).  Associated-function formulas require q >= 2;
// q = 1 is admitted for zonal evaluation only.
struct Signature {
    int p = 2;
    int q = 2;
};

// Throws std::domain_error unless p >= 2 and 1 <= q <= p.
void validate_signature(const Signature& sig);

// C_n^lam(x) by the three-term recurrence
//   n C_n = 2(n+lam-1) x C_{n-1} - (n+2 lam-2) C_{n-2},  C_0 = 1, C_1 = 2 lam x.
// Throws std::domain_error for |x| > 1 or lam <= -1/2 or lam == 0.
double gegenbauer(const GegenbauerOrder& order, double x);

// Squared L2 norm of C_n^lam under the weight (1-x^2)^{lam-1/2} on [-1,1]:
//   h_n^lam = pi 2^{1-2 lam} Gamma(n+2 lam) / (n! (n+lam) Gamma(lam)^2).
double gegenbauer_norm_sq(unsigned n, double lam);

// Normalization constant of the general (q >= 3) canonical basis element
// with labels (lambda, l, mu, m): 1/sqrt(h_{lambda-l}^{l+(q-2)/2}
// h_{mu-m}^{m+(p-2)/2}).  Throws std::domain_error if q < 3 or the label
// ordering lambda >= l, mu >= m is violated.
double basis_norm_general(const Signature& sig, unsigned lambda, unsigned l,
                          unsigned mu, unsigned m);

// Normalization constant for the q = 2 basis (Gegenbauer in x, Fourier mode
// in the angle): 1/sqrt(2 pi h_{mu-m}^{m+(p-2)/2}).  Requires p >= 3.
double basis_norm_q2(int p, unsigned mu, unsigned m);

// The coefficient a^p_mu of the associated-function integral transforms:
//   a^p_mu = (1/2pi) sqrt( Gamma(p/2) / (sqrt(pi) Gamma((p-1)/2)
//                          h_mu^{(p-2)/2}) ),   p >= 3.
double assoc_coeff(int p, unsigned mu);

// Pair coefficient 4 pi^2 a^p_mu a^q_lambda (p, q >= 3).
double assoc_pair_coeff(const Signature& sig, unsigned lambda, unsigned mu);

} // namespace sopq

#endif
