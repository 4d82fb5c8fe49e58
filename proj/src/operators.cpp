#include "vww/operators.hpp"

#include <cmath>

namespace vww {

namespace {

int sgn(int k) { return (k > 0) - (k < 0); }

constexpr double kParityTol = 1e-12;

} // namespace

void MultiplierSpec::validate_on(const Grid& grid) const {
    const Complex m0 = symbol_(0);
    if (!std::isfinite(m0.real()) || !std::isfinite(m0.imag()))
        throw CorruptedFieldError("multiplier '" + name_ + "' has non-finite symbol at k=0");

    for (int k = 1; k <= grid.max_wavenumber(); ++k) {
        const Complex mp = symbol_(k);
        const Complex mm = symbol_(-k);
        switch (parity_) {
            case Parity::Even:
                if (std::abs(mm - mp) > kParityTol * (1.0 + std::abs(mp)) ||
                    std::abs(mp.imag()) > kParityTol * (1.0 + std::abs(mp)))
                    throw CorruptedFieldError("multiplier '" + name_ +
                                              "' violates even parity at k=" + std::to_string(k));
                break;
            case Parity::Odd:
                if (std::abs(mm + mp) > kParityTol * (1.0 + std::abs(mp)) ||
                    std::abs(mp.real()) > kParityTol * (1.0 + std::abs(mp)))
                    throw CorruptedFieldError("multiplier '" + name_ +
                                              "' violates odd parity at k=" + std::to_string(k));
                break;
            case Parity::None:
                break;
        }
    }
}

SpectralField MultiplierSpec::apply(const SpectralField& f) const {
    SpectralField out(f.grid());
    const int n = f.size();
    for (int i = 0; i < n; ++i)
        out.coeffs()[i] = symbol_(f.grid().wavenumber_at(i)) * f.coeffs()[i];
    if (parity_ != Parity::Even) out.zero_nyquist();
    return out;
}

MultiplierSpec MultiplierSpec::hilbert() {
    return {"hilbert", Parity::Odd, [](int k) { return Complex(0.0, -sgn(k)); }};
}

MultiplierSpec MultiplierSpec::lambda_pow(double s) {
    return {"lambda^" + std::to_string(s), Parity::Even, [s](int k) {
                return k == 0 ? Complex(0.0) : Complex(std::pow(std::abs(k), s));
            }};
}

MultiplierSpec MultiplierSpec::derivative(int n) {
    return {"dx^" + std::to_string(n), n % 2 == 0 ? Parity::Even : Parity::Odd, [n](int k) {
                return std::pow(Complex(0.0, k), n);
            }};
}

SpectralField hilbert(const SpectralField& f) {
    SpectralField out(f.grid());
    const int n = f.size();
    for (int i = 0; i < n; ++i) {
        const int k = f.grid().wavenumber_at(i);
        out.coeffs()[i] = Complex(0.0, -sgn(k)) * f.coeffs()[i];
    }
    out.zero_nyquist();
    return out;
}

SpectralField lambda_pow(const SpectralField& f, double s) {
    if (s < 0.0 && std::abs(f.mean()) > 1e-13)
        throw SingularModeError("lambda_pow with s=" + std::to_string(s) +
                                " requires a mean-zero field");
    SpectralField out(f.grid());
    const int n = f.size();
    for (int i = 1; i < n; ++i) {
        const int k = f.grid().wavenumber_at(i);
        out.coeffs()[i] = std::pow(std::abs(static_cast<double>(k)), s) * f.coeffs()[i];
    }
    return out;
}

SpectralField derivative(const SpectralField& f, int n) {
    SpectralField out(f.grid());
    const int size = f.size();
    for (int i = 0; i < size; ++i) {
        const int k = f.grid().wavenumber_at(i);
        out.coeffs()[i] = std::pow(Complex(0.0, k), n) * f.coeffs()[i];
    }
    if (n % 2 != 0) out.zero_nyquist();
    return out;
}

SpectralField commutator_hilbert(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid())
        throw GridMismatchError("commutator_hilbert requires fields on the same grid");
    SpectralField out = hilbert(dealiased_product(f, g));
    out.coeffs() -= dealiased_product(f, hilbert(g)).coeffs();
    return out;
}

SpectralField commutator_dxx(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid())
        throw GridMismatchError("commutator_dxx requires fields on the same grid");
    SpectralField out = dealiased_product(g, derivative(f, 2));
    out.coeffs() += 2.0 * dealiased_product(derivative(f, 1), derivative(g, 1)).coeffs();
    return out;
}

} // namespace vww
