#include "sopq/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace sopq {

namespace {

// Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set).
// Gives ~1e-15 relative accuracy for Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * 3.14159265358979323846);
constexpr double kPi = 3.14159265358979323846;

// Lanczos core, valid for Re z >= 0.5.
Complex log_gamma_lanczos(const Complex& z)
{
    Complex s = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k)
        s += kLanczosCoeff[k] / (z + Complex(k - 1, 0));
    Complex t = z + (kLanczosG - 0.5);
    return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(s);
}

// ln sin(pi z) on the continuation branch consistent with the principal
// log-gamma, for Im z >= 0.  Written so the exponentially large factor is
// pulled out in closed form: sin(pi z) = -e^{-i pi z}(1 - e^{2 pi i z})/(2i).
Complex log_sin_pi_upper(const Complex& z)
{
    const Complex i(0.0, 1.0);
    Complex w = std::exp(2.0 * kPi * i * z); // |w| <= 1 for Im z >= 0
    return -i * kPi * z + std::log(1.0 - w) + i * (kPi / 2.0)
           - std::log(2.0);
}

} // namespace

bool is_gamma_pole(const Complex& z)
{
    return z.imag() == 0.0 && z.real() <= 0.0
           && z.real() == std::floor(z.real());
}

Complex log_gamma(Complex z)
{
    if (is_gamma_pole(z))
        throw std::domain_error("log_gamma: argument is a pole of Gamma");
    if (z.real() >= 0.5)
        return log_gamma_lanczos(z);
    // Reflection into the right half plane.  Work in the closed upper half
    // plane and recover the lower half by the conjugation symmetry.
    if (z.imag() < 0.0)
        return std::conj(log_gamma(std::conj(z)));
    return std::log(kPi) - log_sin_pi_upper(z) - log_gamma_lanczos(1.0 - z);
}

Complex pochhammer(Complex a, unsigned n)
{
    if (n == 0)
        return Complex(1.0, 0.0);
    if (is_gamma_pole(a) && -a.real() < static_cast<double>(n))
        return Complex(0.0, 0.0); // product crosses zero
    if (n <= 64 || is_gamma_pole(a)) {
        Complex prod(1.0, 0.0);
        for (unsigned k = 0; k < n; ++k)
            prod *= a + static_cast<double>(k);
        return prod;
    }
    return std::exp(log_gamma(a + static_cast<double>(n)) - log_gamma(a));
}

Complex gamma_ratio(const std::vector<Complex>& num,
                    const std::vector<Complex>& den)
{
    Complex acc(0.0, 0.0);
    for (const Complex& z : num)
        acc += log_gamma(z);
    for (const Complex& z : den)
        acc -= log_gamma(z);
    return std::exp(acc);
}

} // namespace sopq
