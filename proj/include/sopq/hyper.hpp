#ifndef SOPQ_HYPER_HPP
#define SOPQ_HYPER_HPP

// Hypergeometric engines: terminating Appell F2 double sums (including a
// cancellation-free path at unit arguments) and a generic two-variable
// Horn-type series evaluator.

#include "sopq/scalar.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace sopq {

// Thrown when a series fails to converge or diverges outright.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A group of parameters sharing one Pochhammer index row.  The row entries
// are the coefficients of (n1, n2) in the Pochhammer index: a parameter a
// in a group with row (u1, u2) contributes (a)_{u1 n1 + u2 n2}.
struct HornParamGroup {
    std::array<int, 2> row{0, 0};
    std::vector<Complex> params;
};

// Two-variable Horn series
//   sum_{n1,n2 >= 0} prod_num (a)_{u.n} / prod_den (b)_{v.n}
//                    * X1^{n1} X2^{n2} / (n1! n2!).
struct HornSeriesSpec {
    std::vector<HornParamGroup> numerator;
    std::vector<HornParamGroup> denominator;
    std::array<Complex, 2> args{Complex(0.0), Complex(0.0)};
};

struct SeriesResult {
    Complex value{0.0, 0.0};
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
};

// Terminating Appell F2:
//   sum_{m<=l1, n<=l2} (a)_{m+n} (-l1)_m (-l2)_n / ((b1)_m (b2)_n m! n!)
//                      x^m y^n,
// summed exactly (no truncation).  Throws std::domain_error if a
// denominator Pochhammer vanishes inside the summation range.
Complex appell_f2_terminating(Complex a, unsigned l1, unsigned l2,
                              Complex b1, Complex b2, Complex x, Complex y);

// F2(a, -l1, -l2; b1, b2; 1, 1) by a single sum.  The naive double sum
// at unit arguments loses all precision for moderate l (terms of size ~4^l
// cancel to a decaying value); this path reduces the inner sum in closed
// form and is accurate to ~1e-15 across the working domain, including the
// degenerate cases where b2 - a is a non-positive integer.
Complex appell_f2_unit(Complex a, unsigned l1, unsigned l2,
                       Complex b1, Complex b2);

// Per-variable balance: sum of numerator row entries (counted once per
// parameter) equals the denominator sum plus one, for each variable.
bool horn_validate(const HornSeriesSpec& spec);

// Sums the Horn series with anti-diagonal (n1+n2 = N) shells and Pochhammer
// term recurrences.  Stops when three consecutive shells fall below tol
// relative to the accumulated sum; converged=false if max_terms is reached
// first.  Throws std::invalid_argument if the balance fails, and
// convergence_error if shell magnitudes grow persistently (divergence).
SeriesResult horn_eval(const HornSeriesSpec& spec, double tol,
                       unsigned max_terms);

} // namespace sopq

#endif
