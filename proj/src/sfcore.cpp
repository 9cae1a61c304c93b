#include "sopq/sfcore.hpp"

#include <cmath>
#include <stdexcept>

namespace sopq {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_parity(const RepParam& rep)
{
    if (rep.epsilon == 0)
        return;
    if (rep.epsilon == 1)
        throw std::domain_error(
            "zonal/associated functions exist only for even (epsilon=0) "
            "representations");
    throw std::domain_error("epsilon must be 0 or 1");
}

void check_guard(double alpha, double guard)
{
    if (!(guard > 0.0) || !(guard < 1.0))
        throw std::invalid_argument("guard must lie in (0,1)");
    double t = std::tanh(alpha);
    if (t * t > guard)
        throw convergence_error(
            "series evaluation outside the convergence guard "
            "(th^2 alpha exceeds the configured limit)");
}

void check_index(const AssocIndex& idx)
{
    if (idx.nu != 0 && idx.nu != 1)
        throw std::domain_error("AssocIndex: nu must be 0 or 1");
    if (idx.s < 0 || idx.r < 0)
        throw std::domain_error("AssocIndex: s, r must be >= 0");
}

// Constant block of the associated-function series: (-1)^{s+r} A1 A2.
// A1, A2 were validated term by term against the integral representation;
// the corrected exponent and the d=2 / label-0 extension of A2 are recorded
// in ERRATA.md.
Complex assoc_constant(int p, int q, const Complex& sigma,
                       const AssocIndex& idx)
{
    const int nu = idx.nu, s = idx.s, r = idx.r;
    const double pd = p, qd = q;
    Complex poch = pochhammer(-sigma / 2.0,
                              static_cast<unsigned>(s + r + nu));
    const double b1 = 2.0 * s + nu + pd / 2.0;
    const double b2 = 2.0 * r + nu + qd / 2.0;
    double sq = kPi
                * gamma_ratio({Complex(2.0 * s + nu + pd - 1.0),
                               Complex(2.0 * r + nu + qd - 1.0),
                               Complex(pd / 2.0), Complex(qd / 2.0)},
                              {Complex(2.0 * s + nu + 1.0),
                               Complex(2.0 * r + nu + 1.0),
                               Complex((pd - 1.0) / 2.0),
                               Complex((qd - 1.0) / 2.0)})
                      .real();
    double a1 = std::pow(2.0, 3.0 - nu - (pd + qd) / 2.0) * std::sqrt(sq)
                * gamma_ratio({Complex(1.0)}, {Complex(b1), Complex(b2)})
                      .real();
    auto f = [](double n, double d) {
        return (n == 0.0 || d == 2.0) ? 0.5 : (n + (d - 2.0) / 2.0)
                                                  / (n + d - 2.0);
    };
    double a2 = std::sqrt(f(nu + 2.0 * s, pd) * f(nu + 2.0 * r, qd));
    double sgn = ((s + r) % 2 == 0) ? 1.0 : -1.0;
    return sgn * a1 * a2 * poch;
}

// Associated series without the p >= q ordering requirement (the p<->q
// symmetry evaluation needs the swapped call).
SeriesResult assoc_series_raw(int p, int q, const Complex& sigma,
                              const AssocIndex& idx, double alpha,
                              double tol, unsigned max_l, double guard)
{
    if (p < 2 || q < 2)
        throw std::domain_error("assoc_series: requires p, q >= 2");
    check_index(idx);
    check_guard(alpha, guard);
    if (!(tol > 0.0))
        throw std::invalid_argument("assoc_series: tol must be positive");

    const int nu = idx.nu, s = idx.s, r = idx.r;
    const double th = std::tanh(alpha), ch = std::cosh(alpha);
    const double T = th * th;
    const Complex a = static_cast<double>(s + r + nu) - sigma / 2.0;
    const Complex b1(2.0 * s + nu + p / 2.0, 0.0);
    const Complex b2(2.0 * r + nu + q / 2.0, 0.0);
    const Complex cblock = assoc_constant(p, q, sigma, idx);

    SeriesResult res;
    const int l0 = std::max(s, r);
    // w_l = l! (nu+1/2)_l / ((l-s)! (l-r)!) th^{2l+nu}
    double w = std::exp(std::lgamma(l0 + 1.0) + std::lgamma(nu + 0.5 + l0)
                        - std::lgamma(nu + 0.5) - std::lgamma(l0 - s + 1.0)
                        - std::lgamma(l0 - r + 1.0))
               * std::pow(th, 2.0 * l0 + nu);
    Complex sum(0.0, 0.0);
    double prev = 0.0;
    unsigned below = 0;
    bool converged = false;
    std::size_t terms = 0;
    double tail = 0.0;
    for (int l = l0;; ++l) {
        Complex f2 = appell_f2_unit(a, static_cast<unsigned>(l - s),
                                    static_cast<unsigned>(l - r), b1, b2);
        Complex term = w * f2;
        sum += term;
        ++terms;
        double ta = std::abs(term);
        double scale = std::max(std::abs(sum), 1e-300);
        double ratio = (prev > 0.0 && ta < prev) ? ta / prev : 0.0;
        tail = ((ratio > 0.0) ? ta * ratio / (1.0 - ratio) : ta) / scale;
        below = (ta <= tol * scale) ? below + 1 : 0;
        if (below >= 3 && tail <= tol) {
            converged = true;
            break;
        }
        if (terms >= max_l) {
            converged = false;
            break;
        }
        prev = ta;
        w *= (l + 1.0) * (l + nu + 0.5) * T
             / ((l + 1.0 - s) * (l + 1.0 - r));
    }
    res.value = cblock * sum / ch;
    res.terms_used = terms;
    res.tail_estimate = tail;
    res.converged = converged;
    if (!std::isfinite(res.value.real()) || !std::isfinite(res.value.imag()))
        throw convergence_error("assoc_series: non-finite accumulation");
    return res;
}

// Horn spec of the compact associated-function form, valid for s >= r.
HornSeriesSpec assoc_horn_spec_raw(int p, int q, const Complex& sigma,
                                   const AssocIndex& idx, double alpha)
{
    const int nu = idx.nu, s = idx.s, r = idx.r;
    const double T = std::tanh(alpha) * std::tanh(alpha);
    HornSeriesSpec spec;
    spec.numerator = {
        {{1, 1}, {Complex(s + 1.0), Complex(s + nu + 0.5)}},
        {{1, 0}, {static_cast<double>(s + r + nu) - sigma / 2.0}},
        {{0, 1},
         {(static_cast<double>(q) + sigma) / 2.0,
          static_cast<double>(s - r) + (static_cast<double>(p) + sigma) / 2.0}},
    };
    spec.denominator = {
        {{1, 1},
         {Complex(2.0 * s + nu + p / 2.0), Complex(s + r + nu + q / 2.0)}},
        {{0, 1}, {Complex(1.0 + s - r)}},
    };
    spec.args = {Complex(T), Complex(T)};
    return spec;
}

SeriesResult assoc_horn_raw(int p, int q, const Complex& sigma,
                            const AssocIndex& idx, double alpha, double tol,
                            double guard)
{
    if (idx.s < idx.r) {
        AssocIndex sw{idx.nu, idx.r, idx.s};
        return assoc_horn_raw(q, p, sigma, sw, alpha, tol, guard);
    }
    if (p < 2 || q < 2)
        throw std::domain_error("assoc_horn: requires p, q >= 2");
    check_index(idx);
    check_guard(alpha, guard);
    const int nu = idx.nu, s = idx.s, r = idx.r;
    const double th = std::tanh(alpha), ch = std::cosh(alpha);
    // Extra constant of the compact form relative to the series:
    //   A3 = (2s+nu)! ((2-sigma-q)/2)_{s-r}
    //        / ((s-r)! 4^s (2r+nu+q/2)_{s-r}).
    Complex a3 = std::exp(std::lgamma(2.0 * s + nu + 1.0)
                          - std::lgamma(s - r + 1.0))
                 * pochhammer((2.0 - sigma - static_cast<double>(q)) / 2.0,
                              static_cast<unsigned>(s - r))
                 / (std::pow(4.0, s)
                    * pochhammer(Complex(2.0 * r + nu + q / 2.0),
                                 static_cast<unsigned>(s - r)));
    HornSeriesSpec spec = assoc_horn_spec_raw(p, q, sigma, idx, alpha);
    SeriesResult h = horn_eval(spec, tol, 200000);
    // The compact form carries the constant block WITHOUT the series'
    // (-1)^{s+r} prefactor: that sign is regenerated by the resummation.
    double sgn = ((s + r) % 2 == 0) ? 1.0 : -1.0;
    Complex pref = sgn * assoc_constant(p, q, sigma, idx) * a3
                   * std::pow(th, 2.0 * s + nu) / ch;
    h.value *= pref;
    return h;
}

} // namespace

bool is_principal_unitary(const Signature& sig, const RepParam& rep,
                          double tol)
{
    validate_signature(sig);
    return std::abs(rep.sigma.real() + (sig.p + sig.q - 2.0) / 2.0) <= tol;
}

double theta(const Rapidity& alpha, double x, double y)
{
    if (!(std::abs(x) <= 1.0) || !(std::abs(y) <= 1.0))
        throw std::domain_error("theta: (x,y) outside the unit square");
    double sh = std::sinh(alpha.alpha), ch = std::cosh(alpha.alpha);
    return 1.0 + (x * x + y * y) * sh * sh - 2.0 * x * y * sh * ch;
}

double theta_angular(const Rapidity& alpha, double chi, double phi)
{
    double sh = std::sinh(alpha.alpha), ch = std::cosh(alpha.alpha);
    double a = std::cos(phi) * ch - std::cos(chi) * sh;
    double sp = std::sin(phi);
    return a * a + sp * sp;
}

SeriesResult zonal_series(const Signature& sig, const RepParam& rep,
                          const Rapidity& alpha, double tol, unsigned max_l,
                          double guard)
{
    validate_signature(sig);
    check_parity(rep);
    check_guard(alpha.alpha, guard);
    if (!(tol > 0.0))
        throw std::invalid_argument("zonal_series: tol must be positive");

    const double th = std::tanh(alpha.alpha), ch = std::cosh(alpha.alpha);
    const double T = th * th;
    const Complex a = -rep.sigma / 2.0;
    const Complex b1(sig.p / 2.0, 0.0), b2(sig.q / 2.0, 0.0);

    SeriesResult res;
    double c = 1.0; // (1/2)_l th^{2l} / l!
    Complex sum(0.0, 0.0);
    double prev = 0.0, tail = 0.0;
    unsigned below = 0;
    bool converged = false;
    std::size_t terms = 0;
    for (unsigned l = 0;; ++l) {
        Complex term = c * appell_f2_unit(a, l, l, b1, b2);
        sum += term;
        ++terms;
        double ta = std::abs(term);
        double scale = std::max(std::abs(sum), 1e-300);
        double ratio = (prev > 0.0 && ta < prev) ? ta / prev : 0.0;
        tail = ((ratio > 0.0) ? ta * ratio / (1.0 - ratio) : ta) / scale;
        below = (ta <= tol * scale) ? below + 1 : 0;
        if (below >= 3 && tail <= tol) {
            converged = true;
            break;
        }
        if (terms >= max_l) {
            converged = false;
            break;
        }
        prev = ta;
        c *= (0.5 + l) * T / (l + 1.0);
    }
    res.value = sum / ch;
    res.terms_used = terms;
    res.tail_estimate = tail;
    res.converged = converged;
    if (!std::isfinite(res.value.real()) || !std::isfinite(res.value.imag()))
        throw convergence_error("zonal_series: non-finite accumulation");
    return res;
}

HornSeriesSpec zonal_horn_spec(const Signature& sig, const RepParam& rep,
                               const Rapidity& alpha)
{
    const double T = std::tanh(alpha.alpha) * std::tanh(alpha.alpha);
    const Complex sigma = rep.sigma;
    HornSeriesSpec spec;
    spec.numerator = {
        {{1, 1}, {Complex(0.5), Complex(1.0)}},
        {{1, 0}, {-sigma / 2.0}},
        {{0, 1},
         {(static_cast<double>(sig.q) + sigma) / 2.0,
          (static_cast<double>(sig.p) + sigma) / 2.0}},
    };
    spec.denominator = {
        {{1, 1}, {Complex(sig.p / 2.0), Complex(sig.q / 2.0)}},
        {{0, 1}, {Complex(1.0)}},
    };
    spec.args = {Complex(T), Complex(T)};
    return spec;
}

SeriesResult zonal_horn(const Signature& sig, const RepParam& rep,
                        const Rapidity& alpha, double tol, double guard)
{
    validate_signature(sig);
    check_parity(rep);
    check_guard(alpha.alpha, guard);
    HornSeriesSpec spec = zonal_horn_spec(sig, rep, alpha);
    SeriesResult h = horn_eval(spec, tol, 200000);
    h.value /= std::cosh(alpha.alpha);
    return h;
}

SeriesResult assoc_series(const Signature& sig, const RepParam& rep,
                          const AssocIndex& idx, const Rapidity& alpha,
                          double tol, unsigned max_l, double guard)
{
    validate_signature(sig);
    check_parity(rep);
    return assoc_series_raw(sig.p, sig.q, rep.sigma, idx, alpha.alpha, tol,
                            max_l, guard);
}

SeriesResult assoc_horn(const Signature& sig, const RepParam& rep,
                        const AssocIndex& idx, const Rapidity& alpha,
                        double tol, double guard)
{
    validate_signature(sig);
    check_parity(rep);
    return assoc_horn_raw(sig.p, sig.q, rep.sigma, idx, alpha.alpha, tol,
                          guard);
}

HornSeriesSpec assoc_horn_spec(const Signature& sig, const RepParam& rep,
                               const AssocIndex& idx, const Rapidity& alpha)
{
    validate_signature(sig);
    check_parity(rep);
    if (idx.s < idx.r) {
        AssocIndex sw{idx.nu, idx.r, idx.s};
        return assoc_horn_spec_raw(sig.q, sig.p, rep.sigma, sw, alpha.alpha);
    }
    return assoc_horn_spec_raw(sig.p, sig.q, rep.sigma, idx, alpha.alpha);
}

double symmetry_check(const Signature& sig, const RepParam& rep,
                      const AssocIndex& idx, const Rapidity& alpha)
{
    validate_signature(sig);
    check_parity(rep);
    SeriesResult a = assoc_series_raw(sig.p, sig.q, rep.sigma, idx,
                                      alpha.alpha, 1e-13, 400, kDefaultGuard);
    AssocIndex sw{idx.nu, idx.r, idx.s};
    SeriesResult b = assoc_series_raw(sig.q, sig.p, rep.sigma, sw,
                                      alpha.alpha, 1e-13, 400, kDefaultGuard);
    return std::abs(a.value - b.value);
}

double unitary_pair_check(const Signature& sig, const RepParam& rep,
                          const Rapidity& alpha)
{
    validate_signature(sig);
    check_parity(rep);
    RepParam dual{2.0 - sig.p - sig.q - rep.sigma, rep.epsilon};
    SeriesResult a = zonal_series(sig, rep, alpha);
    SeriesResult b = zonal_series(sig, dual, alpha);
    return std::abs(a.value - b.value);
}

} // namespace sopq
