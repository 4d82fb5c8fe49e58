#ifndef VWW_OPERATORS_HPP
#define VWW_OPERATORS_HPP

#include <functional>
#include <string>

#include "vww/spectral.hpp"
#include "vww/spectral_field.hpp"

namespace vww {

/// Symbol parity drives reality handling: even symbols are real with
/// m(-k) = m(k), odd symbols are purely imaginary with m(-k) = -m(k).
/// Odd multipliers zero the unpaired Nyquist mode to keep fields real.
enum class Parity { Even, Odd, None };

/// A Fourier multiplier m(k) applied coefficient-wise.
class MultiplierSpec {
public:
    using Symbol = std::function<Complex(int)>;

    MultiplierSpec(std::string name, Parity parity, Symbol symbol)
        : name_(std::move(name)), parity_(parity), symbol_(std::move(symbol)) {}

    const std::string& name() const { return name_; }
    Parity parity() const { return parity_; }
    Complex symbol(int k) const { return symbol_(k); }

    /// Check the parity/reality conditions on every wavenumber of `grid`;
    /// throws CorruptedFieldError on violation.
    void validate_on(const Grid& grid) const;

    /// Apply the multiplier; non-even symbols zero the Nyquist mode, which
    /// has no conjugate partner to keep the field real.
    SpectralField apply(const SpectralField& f) const;

    static MultiplierSpec hilbert();
    static MultiplierSpec lambda_pow(double s);
    static MultiplierSpec derivative(int n);

private:
    std::string name_;
    Parity parity_;
    Symbol symbol_;
};

/// Hilbert transform: ghat(k) = -i sgn(k) fhat(k), with sgn(0) = 0.
SpectralField hilbert(const SpectralField& f);

/// Calderon operator power: ghat(k) = |k|^s fhat(k), ghat(0) = 0.
/// Negative s requires a mean-zero field (SingularModeError otherwise).
SpectralField lambda_pow(const SpectralField& f, double s);

/// n-th spatial derivative: ghat(k) = (ik)^n fhat(k).
SpectralField derivative(const SpectralField& f, int n);

/// [H, f]g = H(f g) - f H(g), products dealiased.
SpectralField commutator_hilbert(const SpectralField& f, const SpectralField& g);

/// [dxx, f]g = dxx(f g) - f dxx(g), evaluated in the Leibniz form
/// g dxx(f) + 2 dx(f) dx(g) to avoid cancellation of large terms at high k.
SpectralField commutator_dxx(const SpectralField& f, const SpectralField& g);

} // namespace vww

#endif // VWW_OPERATORS_HPP
