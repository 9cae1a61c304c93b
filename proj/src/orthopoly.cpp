#include "sopq/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace sopq {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void validate_signature(const Signature& sig)
{
    if (sig.p < 2 || sig.q < 1 || sig.q > sig.p)
        throw std::domain_error(
            "signature: require p >= 2 and 1 <= q <= p");
}

double gegenbauer(const GegenbauerOrder& order, double x)
{
    if (!(std::abs(x) <= 1.0))
        throw std::domain_error("gegenbauer: |x| > 1");
    if (!(order.lam > -0.5) || order.lam == 0.0)
        throw std::domain_error("gegenbauer: require lam > -1/2, lam != 0");
    const double lam = order.lam;
    if (order.n == 0)
        return 1.0;
    double cm2 = 1.0;
    double cm1 = 2.0 * lam * x;
    for (unsigned n = 2; n <= order.n; ++n) {
        double c = (2.0 * (n + lam - 1.0) * x * cm1
                    - (n + 2.0 * lam - 2.0) * cm2) / n;
        cm2 = cm1;
        cm1 = c;
    }
    return cm1;
}

double gegenbauer_norm_sq(unsigned n, double lam)
{
    if (!(lam > -0.5) || lam == 0.0)
        throw std::domain_error("gegenbauer_norm_sq: bad lam");
    // pi 2^{1-2 lam} Gamma(n+2 lam) / (n! (n+lam) Gamma(lam)^2)
    Complex r = gamma_ratio({Complex(n + 2.0 * lam, 0.0)},
                            {Complex(n + 1.0, 0.0), Complex(lam, 0.0),
                             Complex(lam, 0.0)});
    return kPi * std::pow(2.0, 1.0 - 2.0 * lam) * r.real() / (n + lam);
}

double basis_norm_general(const Signature& sig, unsigned lambda, unsigned l,
                          unsigned mu, unsigned m)
{
    validate_signature(sig);
    if (sig.q < 3)
        throw std::domain_error("basis_norm_general: requires q >= 3");
    if (lambda < l || mu < m)
        throw std::domain_error(
            "basis_norm_general: require lambda >= l and mu >= m");
    double hy = gegenbauer_norm_sq(lambda - l, l + (sig.q - 2) / 2.0);
    double hx = gegenbauer_norm_sq(mu - m, m + (sig.p - 2) / 2.0);
    return 1.0 / std::sqrt(hy * hx);
}

double basis_norm_q2(int p, unsigned mu, unsigned m)
{
    if (p < 3)
        throw std::domain_error("basis_norm_q2: requires p >= 3");
    if (mu < m)
        throw std::domain_error("basis_norm_q2: require mu >= m");
    double hx = gegenbauer_norm_sq(mu - m, m + (p - 2) / 2.0);
    return 1.0 / std::sqrt(2.0 * kPi * hx);
}

double assoc_coeff(int p, unsigned mu)
{
    if (p < 3)
        throw std::domain_error("assoc_coeff: requires p >= 3");
    double h = gegenbauer_norm_sq(mu, (p - 2) / 2.0);
    Complex r = gamma_ratio({Complex(p / 2.0, 0.0)},
                            {Complex((p - 1) / 2.0, 0.0)});
    return (1.0 / (2.0 * kPi))
           * std::sqrt(r.real() / (std::sqrt(kPi) * h));
}

double assoc_pair_coeff(const Signature& sig, unsigned lambda, unsigned mu)
{
    return 4.0 * kPi * kPi * assoc_coeff(sig.p, mu)
           * assoc_coeff(sig.q, lambda);
}

} // namespace sopq
