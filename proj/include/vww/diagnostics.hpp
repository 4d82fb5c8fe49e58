#ifndef VWW_DIAGNOSTICS_HPP
#define VWW_DIAGNOSTICS_HPP

#include <array>
#include <utility>

#include "vww/model.hpp"

namespace vww {

/// Sobolev orders reported for f and f_t, in CSV column order.
inline constexpr std::array<double, 8> kHNormOrders = {1.0, 2.0, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5};
inline constexpr std::array<double, 5> kFtNormOrders = {2.25, 3.0, 3.5, 4.0, 4.5};

/// One row of runtime diagnostics at time t. e_max is the running maximum of
/// the instantaneous energy over the diagnostic sampling instants, a discrete
/// stand-in for the sup over continuous time.
struct DiagnosticsRecord {
    double t = 0.0;
    std::array<double, kHNormOrders.size()> h_norms{};
    std::array<double, kFtNormOrders.size()> ft_norms{};
    double e_inst = 0.0;
    double e_max = 0.0;
    double dissipation = 0.0;
    double e_linear = 0.0;
};

/// Homogeneous Sobolev norm of the band-limited interpolant:
/// sqrt(2*pi * sum_k |k|^{2s} |fhat(k)|^2). Negative s requires mean-zero f.
double sobolev_norm(const SpectralField& f, double s);

/// Instantaneous energy bracket and its running max:
/// e = |f|_{H4}^2 + beta |f|_{H5}^2 + delta^2 |f|_{H5.5}^2 + |f_t|_{H3.5}^2.
std::pair<double, double> energy(const WaveState& s, const ModelParams& p, double prev_max);

/// Dissipation functional 2*delta*|f_t|_{H4.5}^2.
double dissipation(const WaveState& s, const ModelParams& p);

/// Quadratic form |f_t|_{L2}^2 + |f|_{H0.5}^2 + beta |f|_{H1.5}^2 +
/// delta^2 |f|_{H2}^2, whose derivative along the linear flow is
/// -4*delta*|f_t|_{H1}^2; used as a machine-checkable decay law.
double linear_energy(const WaveState& s, const ModelParams& p);

/// Assemble a full record from a state.
DiagnosticsRecord compute_diagnostics(const WaveState& s, const ModelParams& p, double prev_emax);

} // namespace vww

#endif // VWW_DIAGNOSTICS_HPP
