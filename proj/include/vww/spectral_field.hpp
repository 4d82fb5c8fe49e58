#ifndef VWW_SPECTRAL_FIELD_HPP
#define VWW_SPECTRAL_FIELD_HPP

#include <complex>

#include <Eigen/Dense>

#include "vww/grid.hpp"

namespace vww {

using Complex = std::complex<double>;

/// Fourier coefficients of a real periodic function on [-pi, pi),
/// convention f(x) = sum_k fhat(k) e^{ikx}.
///
/// Coefficients are stored in FFT index order (see Grid). Real-valued
/// fields satisfy fhat(-k) = conj(fhat(k)) and a real Nyquist mode.
class SpectralField {
public:
    /// Tolerance for the conjugate-symmetry (reality) check.
    static constexpr double kSymmetryTol = 1e-10;

    explicit SpectralField(const Grid& grid)
        : grid_(grid), coeffs_(Eigen::ArrayXcd::Zero(grid.size())) {}

    SpectralField(const Grid& grid, Eigen::ArrayXcd coeffs)
        : grid_(grid), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != grid_.size())
            throw ShapeError("coefficient array length " + std::to_string(coeffs_.size()) +
                             " does not match grid size " + std::to_string(grid_.size()));
    }

    const Grid& grid() const { return grid_; }
    int size() const { return grid_.size(); }

    Eigen::ArrayXcd& coeffs() { return coeffs_; }
    const Eigen::ArrayXcd& coeffs() const { return coeffs_; }

    Complex coeff(int k) const { return coeffs_[grid_.index_of(k)]; }
    void set_coeff(int k, Complex v) { coeffs_[grid_.index_of(k)] = v; }

    Complex mean() const { return coeffs_[0]; }

    /// Max-norm defect of the reality conditions: |fhat(-k) - conj(fhat(k))|
    /// over 0 < k < N/2 plus the imaginary parts of the k=0 and Nyquist modes.
    double symmetry_defect() const {
        double worst = std::abs(coeffs_[0].imag());
        const int half = grid_.size() / 2;
        worst = std::max(worst, std::abs(coeffs_[half].imag()));
        for (int k = 1; k < half; ++k)
            worst = std::max(worst, std::abs(coeff(-k) - std::conj(coeff(k))));
        return worst;
    }

    bool is_real(double tol = kSymmetryTol) const { return symmetry_defect() <= tol; }

    double max_abs() const { return coeffs_.abs().maxCoeff(); }

    void zero_nyquist() { coeffs_[grid_.size() / 2] = 0.0; }

private:
    Grid grid_;
    Eigen::ArrayXcd coeffs_;
};

} // namespace vww

#endif // VWW_SPECTRAL_FIELD_HPP
