#ifndef SOPQ_SCALAR_HPP
#define SOPQ_SCALAR_HPP

// Complex scalar kernel: log-gamma, Pochhammer symbols and gamma ratios.
// Everything downstream (series coefficients, normalization constants)
// funnels through these three functions.

#include <complex>
#include <vector>

namespace sopq {

using Complex = std::complex<double>;

// True when z sits on a pole of Gamma (z = 0, -1, -2, ...), exact test.
bool is_gamma_pole(const Complex& z);

// Principal branch of ln Gamma(z) (the analytic continuation along the
// positive real axis, NOT Log(Gamma(z))).  Relative accuracy ~1e-14 for
// |z| <= 100 off the poles.  Throws std::domain_error at a pole.
Complex log_gamma(Complex z);

// Pochhammer symbol (a)_n = a(a+1)...(a+n-1).  Direct product for n <= 64
// and for all integer a <= 0 (keeps the zero cases exact); log-gamma ratio
// otherwise.  (a)_0 = 1.
Complex pochhammer(Complex a, unsigned n);

// exp(sum ln Gamma(num) - sum ln Gamma(den)); safe for ratios whose
// individual gamma values overflow.  Throws std::domain_error when a
// denominator argument is a pole.
Complex gamma_ratio(const std::vector<Complex>& num,
                    const std::vector<Complex>& den);

} // namespace sopq

#endif
