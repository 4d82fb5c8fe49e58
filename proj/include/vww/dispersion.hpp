#ifndef VWW_DISPERSION_HPP
#define VWW_DISPERSION_HPP

#include <vector>

#include "vww/model.hpp"

namespace vww {

/// Analytic characteristic roots lambda = -decay +/- i*freq of one mode,
/// next to the values recovered from a short simulated linear run.
struct DispersionRow {
    int k = 0;
    double re_lambda = 0.0;  // -delta k^2
    double im_lambda = 0.0;  // sqrt(k + beta k^3)
    double decay_measured = 0.0;
    double freq_measured = 0.0;
};

/// For each k in 1..kmax, run the Linear variant from f0 = cos(kx) and fit
/// the one-step transfer matrix of the sampled (fhat, fthat) sequence by
/// least squares; its eigenvalues give the measured decay and frequency.
/// The linear propagation is exact, so the fit recovers the simulated
/// dynamics to rounding.
std::vector<DispersionRow> measure_dispersion(double delta, double beta, int kmax);

} // namespace vww

#endif // VWW_DISPERSION_HPP
