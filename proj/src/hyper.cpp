#include "sopq/hyper.hpp"

#include <cmath>
#include <stdexcept>

namespace sopq {

namespace {

bool finite(const Complex& z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

Complex appell_f2_terminating(Complex a, unsigned l1, unsigned l2,
                              Complex b1, Complex b2, Complex x, Complex y)
{
    Complex total(0.0, 0.0);
    // row base: term at (m, 0)
    Complex row(1.0, 0.0);
    for (unsigned m = 0;; ++m) {
        if (m > 0) {
            Complex d = b1 + static_cast<double>(m - 1);
            if (d == 0.0)
                throw std::domain_error(
                    "appell_f2_terminating: (b1)_m vanishes in range");
            row *= (a + static_cast<double>(m - 1))
                   * (-static_cast<double>(l1) + static_cast<double>(m - 1))
                   * x / (d * static_cast<double>(m));
        }
        Complex t = row;
        total += t;
        for (unsigned n = 1; n <= l2; ++n) {
            Complex d = b2 + static_cast<double>(n - 1);
            if (d == 0.0)
                throw std::domain_error(
                    "appell_f2_terminating: (b2)_n vanishes in range");
            t *= (a + static_cast<double>(m + n - 1))
                 * (-static_cast<double>(l2) + static_cast<double>(n - 1))
                 * y / (d * static_cast<double>(n));
            total += t;
        }
        if (m == l1)
            break;
    }
    return total;
}

Complex appell_f2_unit(Complex a, unsigned l1, unsigned l2,
                       Complex b1, Complex b2)
{
    // Reduce the inner sum by the Chu-Vandermonde identity:
    //   F2(a,-l1,-l2;b1,b2;1,1)
    //     = sum_{m=0}^{l1} (a)_m (-l1)_m / ((b1)_m m!)
    //                        * (b2-a-m)_{l2} / (b2)_{l2}.
    // The window product (b2-a-m)_{l2} is maintained incrementally with
    // exact tracking of zero factors, so the integer-degenerate cases stay
    // exact and nothing cancels catastrophically.
    Complex window(1.0, 0.0); // product of non-zero window factors / (b2)_{l2}
    unsigned zeros = 0;
    for (unsigned i = 0; i < l2; ++i) {
        Complex d = b2 + static_cast<double>(i);
        if (d == 0.0)
            throw std::domain_error("appell_f2_unit: (b2)_{l2} vanishes");
        Complex f = b2 - a + static_cast<double>(i);
        if (f == 0.0)
            ++zeros;
        else
            window *= f;
        window /= d;
    }
    Complex total(0.0, 0.0);
    Complex c(1.0, 0.0); // (a)_m (-l1)_m / ((b1)_m m!)
    for (unsigned m = 0;; ++m) {
        if (m > 0) {
            Complex d = b1 + static_cast<double>(m - 1);
            if (d == 0.0)
                throw std::domain_error(
                    "appell_f2_unit: (b1)_m vanishes in range");
            c *= (a + static_cast<double>(m - 1))
                 * (-static_cast<double>(l1) + static_cast<double>(m - 1))
                 / (d * static_cast<double>(m));
        }
        if (zeros == 0)
            total += c * window;
        if (m == l1)
            break;
        if (c == 0.0)
            break; // (a)_m hit zero; all later terms vanish
        // Slide the window from offset -m to -(m+1).
        Complex drop = b2 - a - static_cast<double>(m)
                       + static_cast<double>(l2) - 1.0;
        Complex add = b2 - a - static_cast<double>(m) - 1.0;
        if (l2 == 0)
            continue; // empty window stays 1
        if (drop == 0.0)
            --zeros;
        else
            window /= drop;
        if (add == 0.0)
            ++zeros;
        else
            window *= add;
    }
    return total;
}

bool horn_validate(const HornSeriesSpec& spec)
{
    for (int j = 0; j < 2; ++j) {
        long num = 0, den = 0;
        for (const auto& g : spec.numerator)
            num += static_cast<long>(g.row[j]) * g.params.size();
        for (const auto& g : spec.denominator)
            den += static_cast<long>(g.row[j]) * g.params.size();
        if (num != den + 1)
            return false;
    }
    return true;
}

namespace {

// Product of factors a Pochhammer group contributes when variable `var`
// steps from n to n+1 with the other variable held at `other`.
Complex group_step(const HornParamGroup& g, unsigned n1, unsigned n2, int var)
{
    int u = g.row[var];
    if (u == 0)
        return Complex(1.0, 0.0);
    double idx = g.row[0] * static_cast<double>(n1)
                 + g.row[1] * static_cast<double>(n2);
    Complex prod(1.0, 0.0);
    for (const Complex& a : g.params)
        for (int j = 0; j < u; ++j)
            prod *= a + idx + static_cast<double>(j);
    return prod;
}

Complex group_step_den(const HornParamGroup& g, unsigned n1, unsigned n2,
                       int var)
{
    int u = g.row[var];
    if (u == 0)
        return Complex(1.0, 0.0);
    double idx = g.row[0] * static_cast<double>(n1)
                 + g.row[1] * static_cast<double>(n2);
    Complex prod(1.0, 0.0);
    for (const Complex& b : g.params)
        for (int j = 0; j < u; ++j) {
            Complex f = b + idx + static_cast<double>(j);
            if (f == 0.0)
                throw std::domain_error(
                    "horn_eval: denominator Pochhammer vanishes");
            prod *= f;
        }
    return prod;
}

} // namespace

SeriesResult horn_eval(const HornSeriesSpec& spec, double tol,
                       unsigned max_terms)
{
    if (!horn_validate(spec))
        throw std::invalid_argument("horn_eval: balance constraint violated");
    if (!(tol > 0.0))
        throw std::invalid_argument("horn_eval: tol must be positive");
    const Complex X1 = spec.args[0], X2 = spec.args[1];

    SeriesResult res;
    Complex sum(0.0, 0.0);
    std::vector<Complex> colbase; // colbase[n2] = term(0, n2)
    colbase.reserve(64);
    double prev_shell = 0.0, first_shell = 0.0;
    unsigned below = 0, grow = 0;
    std::size_t terms = 0;

    for (unsigned N = 0;; ++N) {
        // Extend the column bases: term(0, N) from term(0, N-1).
        if (N == 0) {
            colbase.push_back(Complex(1.0, 0.0));
        } else {
            Complex f = colbase[N - 1] * X2 / static_cast<double>(N);
            for (const auto& g : spec.numerator)
                f *= group_step(g, 0, N - 1, 1);
            for (const auto& g : spec.denominator)
                f /= group_step_den(g, 0, N - 1, 1);
            colbase.push_back(f);
        }
        // Walk the shell n1 + n2 = N, each term built from its column base
        // by multiplications only (division-free in the numerator factors,
        // so exact zeros of terminating parameters propagate cleanly).
        Complex shell_sum(0.0, 0.0);
        double shell_abs = 0.0;
        for (unsigned n1 = 0; n1 <= N; ++n1) {
            unsigned n2 = N - n1;
            Complex t = colbase[n2];
            for (unsigned k = 0; k < n1; ++k) {
                t *= X1 / static_cast<double>(k + 1);
                for (const auto& g : spec.numerator)
                    t *= group_step(g, k, n2, 0);
                for (const auto& g : spec.denominator)
                    t /= group_step_den(g, k, n2, 0);
            }
            shell_sum += t;
            shell_abs += std::abs(t);
            ++terms;
        }
        sum += shell_sum;
        if (!finite(sum))
            throw convergence_error("horn_eval: overflow in partial sums");
        if (N == 0)
            first_shell = shell_abs;

        double scale = std::max(std::abs(sum), 1e-300);
        if (shell_abs <= tol * scale)
            ++below;
        else
            below = 0;
        if (N > 0 && shell_abs > prev_shell)
            ++grow;
        else
            grow = 0;

        double ratio = (prev_shell > 0.0 && shell_abs < prev_shell)
                           ? shell_abs / prev_shell
                           : 0.0;
        double tail_abs = (ratio > 0.0)
                              ? shell_abs * ratio / (1.0 - ratio)
                              : shell_abs;
        res.value = sum;
        res.terms_used = terms;
        res.tail_estimate = tail_abs / scale;

        if (below >= 3 && res.tail_estimate <= tol) {
            res.converged = true;
            return res;
        }
        if (grow >= 3 && N >= 10 && shell_abs > first_shell)
            throw convergence_error(
                "horn_eval: shell magnitudes grew for 3 consecutive "
                "diagonals (series diverges)");
        if (terms >= max_terms) {
            res.converged = false;
            return res;
        }
        prev_shell = shell_abs;
    }
}

} // namespace sopq
