#ifndef VWW_TIMESTEPPER_HPP
#define VWW_TIMESTEPPER_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "vww/diagnostics.hpp"
#include "vww/model.hpp"

namespace vww {

/// Exact one-step propagator of the homogeneous per-mode ODE
/// u'' + damping u' + stiffness u = 0, plus the Duhamel weights for a
/// forcing held constant over the step:
///   matrix  = exp(dt * A),  A = [[0, 1], [-stiffness, -damping]]
///   duhamel = integral_0^dt exp(sigma * A) dsigma * (0, 1).
struct ModePropagator {
    int k = 0;
    double dt = 0.0;
    Eigen::Matrix2d matrix = Eigen::Matrix2d::Identity();
    Eigen::Vector2d duhamel = Eigen::Vector2d::Zero();
};

/// Closed-form propagator for wavenumber k. The simplified model is
/// underdamped at every k >= 1; the full model with alpha1 != alpha2 can be
/// overdamped, and near-critical modes take a series branch to avoid
/// cancellation. dt may be negative (used by time-reversal checks).
ModePropagator build_propagator(int k, double dt, const ModelParams& p);

/// Propagators for every |k| on a grid, shareable across steps.
class PropagatorTable {
public:
    PropagatorTable(const Grid& grid, double dt, const ModelParams& p);

    double dt() const { return dt_; }
    const ModePropagator& at(int k) const { return table_[std::abs(k)]; }

private:
    double dt_;
    std::vector<ModePropagator> table_;
};

/// One step of the exponential midpoint integrator: the linear part is
/// propagated exactly, the nonlinearity is evaluated at the state and again
/// at the predicted midpoint (two rhs calls, local error O(dt^3)).
/// Throws BlowUpError if any output coefficient is non-finite.
WaveState step(const WaveState& s, double dt, const ModelParams& p);

/// Step reusing prebuilt tables; `full` must hold dt and `half` dt/2.
WaveState step(const WaveState& s, const PropagatorTable& full, const PropagatorTable& half,
               const ModelParams& p);

struct SimConfig {
    double dt = 0.0; // 0 = choose default_dt
    double t_end = 1.0;
    int snapshot_every = 100;
    int diagnostics_every = 10;

    void validate() const;
};

/// Receives snapshots and diagnostics rows during a run, monotone in t.
/// Null callbacks are skipped; a throwing callback aborts the run.
struct SimSink {
    std::function<void(const WaveState&)> on_snapshot;
    std::function<void(const DiagnosticsRecord&)> on_diagnostics;
};

/// Half the period of the fastest retained mode, 0.5 * 2*pi / omega_max with
/// omega_max = sqrt(k_max + beta k_max^3).
double default_dt(const Grid& grid, const ModelParams& p);

/// Advance from init to cfg.t_end, emitting through the sink at the
/// configured cadences (both cadences also fire at the initial instant).
/// The last step is shortened to land exactly on t_end. Throws BlowUpError
/// on non-finite coefficients or e_inst > 1e6 * e_inst(0).
WaveState simulate(const WaveState& init, const ModelParams& p, const SimConfig& cfg,
                   const SimSink& sink);

} // namespace vww

#endif // VWW_TIMESTEPPER_HPP
