#ifndef VWW_CONFIG_HPP
#define VWW_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vww/model.hpp"

namespace vww {

/// One cosine mode of the initial condition: amplitude * cos(k x + phase).
struct InitMode {
    int k = 0;
    double amplitude = 0.0;
    double phase = 0.0;
};

/// Parsed run configuration. Parameter defaults are the small-steepness
/// preset: epsilon = 1e-2, beta = 1e-5, alpha1 = alpha2 = delta = 1e-4.
struct RunConfig {
    int grid_n = 64;
    double dt = 0.0; // 0 = automatic
    double t_end = 1.0;
    double delta = 1e-4;
    double beta = 1e-5;
    double epsilon = 1e-2;
    double alpha1 = 1e-4;
    double alpha2 = 1e-4;
    std::string variant = "simplified";
    std::vector<InitMode> init_modes;
    std::vector<InitMode> init_ft_modes;
    int snapshot_every = 100;
    int diagnostics_every = 10;
    std::string output_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;

    ModelParams params() const;
    void validate() const;
};

/// Parse flat `key = value` text with `#` comments. Unknown or duplicate
/// keys and constraint violations raise ConfigError with the line number.
/// Mode lists use `init = k:amp:phase, k:amp:phase, ...`.
RunConfig parse_config(const std::string& text);

/// Amplitude scale of the seeded random initial condition.
inline constexpr double kRandomInitAmplitude = 1e-2;

/// Build the t = 0 state: f0 from init (or, when init is empty and a seed is
/// given, a random band-limited field with |fhat(k)| = 1e-2 * k^-3 and
/// uniform phases drawn from the documented mt19937_64 stream), f1 from
/// init_ft or zero. Both fields are mean-zero by construction.
WaveState build_initial_state(const RunConfig& cfg, const Grid& grid);

} // namespace vww

#endif // VWW_CONFIG_HPP
