#ifndef VWW_ORACLES_HPP
#define VWW_ORACLES_HPP

#include <random>

#include <Eigen/Dense>

#include "vww/model.hpp"
#include "vww/spectral_field.hpp"

/// Brute-force reference implementations, deliberately independent of the
/// FFT-based code paths they are used to check: direct O(N^2) DFT sums,
/// exact truncated convolutions, physical-space quadrature, and a
/// scaling-and-squaring matrix exponential. Used by the test suites and the
/// `verify` subcommand; not intended for production-size grids.
namespace vww::oracles {

/// fhat(k) = (1/N) sum_j samples_j e^{-ik x_j}, summed directly.
SpectralField dft_forward(const Eigen::ArrayXd& samples, const Grid& grid);

/// samples_j = sum_k fhat(k) e^{ik x_j}, summed directly (real part).
Eigen::ArrayXd dft_inverse(const SpectralField& field);

/// Exact convolution of the dealias-band truncations of a and b, evaluated
/// on the dealias band: chat(k) = sum_m ahat(m) bhat(k-m).
SpectralField truncated_convolution(const SpectralField& a, const SpectralField& b);

/// Per-mode multiplier loop, no Nyquist handling.
SpectralField apply_symbol(const SpectralField& f,
                           const std::function<Complex(int)>& symbol);

SpectralField hilbert(const SpectralField& f);
SpectralField lambda_pow(const SpectralField& f, double s);
SpectralField derivative(const SpectralField& f, int n);

/// H(fg) - f H(g) via truncated convolutions and the symbol loop.
SpectralField commutator_hilbert(const SpectralField& f, const SpectralField& g);

/// dxx(fg) - f dxx(g): the direct (non-Leibniz) form of the bracket.
SpectralField commutator_dxx(const SpectralField& f, const SpectralField& g);

/// Term-by-term right sides assembled from the convolution-based pieces,
/// following the equations exactly as typeset.
SpectralField rhs_simplified(const WaveState& s, const ModelParams& p);
SpectralField rhs_full(const WaveState& s, const ModelParams& p);

/// Matrix exponential by scaling and squaring (Pade), independent of the
/// closed-form propagator formulas.
Eigen::Matrix2d expm(const Eigen::Matrix2d& a);

/// Sobolev norm via physical-space trapezoid quadrature of |Lambda^s f|^2,
/// with Lambda^s applied by the naive loop and samples from the direct DFT.
double quadrature_sobolev_norm(const SpectralField& f, double s);

/// Random real mean-zero field, band-limited to |k| <= kmax, with
/// |fhat(k)| ~ k^{-decay}. Deterministic given the engine state.
SpectralField random_real_field(const Grid& grid, std::mt19937_64& rng, int kmax,
                                double decay = 1.0, double amplitude = 1.0);

} // namespace vww::oracles

#endif // VWW_ORACLES_HPP
