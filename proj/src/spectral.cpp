#include "vww/spectral.hpp"

#include <unsupported/Eigen/FFT>

namespace vww {

namespace {

// One FFT engine per thread; it caches kissfft plans per transform size.
Eigen::FFT<double>& fft_engine() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

// e^{-ik x_j} = (-1)^k e^{-2 pi i k j / N} for x_j = -pi + 2 pi j / N, so
// coefficients relative to a plain DFT carry an alternating sign.
double phase_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

} // namespace

SpectralField forward_transform(const Eigen::ArrayXd& samples, const Grid& grid) {
    const int n = grid.size();
    if (samples.size() != n)
        throw ShapeError("sample array length " + std::to_string(samples.size()) +
                         " does not match grid size " + std::to_string(n));

    Eigen::ArrayXcd in = samples.cast<Complex>();
    Eigen::ArrayXcd out(n);
    fft_engine().fwd(out.data(), in.data(), n);

    SpectralField field(grid);
    for (int i = 0; i < n; ++i)
        field.coeffs()[i] = out[i] * (phase_sign(grid.wavenumber_at(i)) / n);
    return field;
}

Eigen::ArrayXd inverse_transform(const SpectralField& field) {
    const double defect = field.symmetry_defect();
    if (defect > SpectralField::kSymmetryTol)
        throw CorruptedFieldError("conjugate-symmetry defect " + std::to_string(defect) +
                                  " exceeds tolerance");

    const int n = field.size();
    Eigen::ArrayXcd in(n);
    for (int i = 0; i < n; ++i)
        in[i] = field.coeffs()[i] * (phase_sign(field.grid().wavenumber_at(i)) * n);

    Eigen::ArrayXcd out(n);
    fft_engine().inv(out.data(), in.data(), n);

    const double imag_residue = out.imag().abs().maxCoeff();
    if (imag_residue > SpectralField::kSymmetryTol)
        throw CorruptedFieldError("imaginary residue " + std::to_string(imag_residue) +
                                  " after inverse transform");
    return out.real();
}

SpectralField project_mean_zero(const SpectralField& field) {
    SpectralField out = field;
    out.coeffs()[0] = 0.0;
    return out;
}

SpectralField truncate_to_dealias_band(const SpectralField& field) {
    const int cutoff = field.grid().dealias_cutoff();
    SpectralField out = field;
    for (int i = 0; i < field.size(); ++i)
        if (std::abs(field.grid().wavenumber_at(i)) > cutoff) out.coeffs()[i] = 0.0;
    return out;
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b) {
    if (a.grid() != b.grid())
        throw GridMismatchError("dealiased_product requires fields on the same grid");

    const Eigen::ArrayXd pa = inverse_transform(truncate_to_dealias_band(a));
    const Eigen::ArrayXd pb = inverse_transform(truncate_to_dealias_band(b));
    return truncate_to_dealias_band(forward_transform(pa * pb, a.grid()));
}

double inner_product(const SpectralField& a, const SpectralField& b) {
    if (a.grid() != b.grid())
        throw GridMismatchError("inner_product requires fields on the same grid");
    return 2.0 * Grid::pi() * (a.coeffs() * b.coeffs().conjugate()).real().sum();
}

} // namespace vww
