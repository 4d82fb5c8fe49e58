#ifndef VWW_SPECTRAL_HPP
#define VWW_SPECTRAL_HPP

#include <Eigen/Dense>

#include "vww/spectral_field.hpp"

namespace vww {

/// Forward transform: samples on the grid -> Fourier coefficients with the
/// 1/N normalization, fhat(k) = (1/N) sum_j samples_j e^{-ik x_j}.
SpectralField forward_transform(const Eigen::ArrayXd& samples, const Grid& grid);

/// Inverse transform: samples_j = sum_k fhat(k) e^{ik x_j}. Throws
/// CorruptedFieldError if the field is not real within kSymmetryTol.
Eigen::ArrayXd inverse_transform(const SpectralField& field);

/// Returns the field with its k=0 coefficient set to zero.
SpectralField project_mean_zero(const SpectralField& field);

/// Zero all modes |k| > K where K is the grid's dealias cutoff.
SpectralField truncate_to_dealias_band(const SpectralField& field);

/// Pointwise product a*b with 2/3-rule dealiasing: both factors truncated to
/// the dealias band, multiplied in physical space, and the result truncated
/// again so quadratic aliasing vanishes identically.
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b);

/// L2 inner product over the torus of two real fields, via Parseval:
/// <f,g> = 2*pi * sum_k fhat(k) conj(ghat(k)).
double inner_product(const SpectralField& a, const SpectralField& b);

} // namespace vww

#endif // VWW_SPECTRAL_HPP
