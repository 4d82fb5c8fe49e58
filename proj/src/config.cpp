#include "vww/config.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace vww {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& v, const std::string& key, int line) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("expected a number for '" + key + "', got '" + v + "'", line);
    }
    if (pos != v.size())
        throw ConfigError("trailing characters after number for '" + key + "'", line);
    return out;
}

long parse_int(const std::string& v, const std::string& key, int line) {
    std::size_t pos = 0;
    long out;
    try {
        out = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("expected an integer for '" + key + "', got '" + v + "'", line);
    }
    if (pos != v.size())
        throw ConfigError("trailing characters after integer for '" + key + "'", line);
    return out;
}

std::vector<InitMode> parse_modes(const std::string& v, const std::string& key, int line) {
    std::vector<InitMode> modes;
    std::stringstream ss(v);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        entry = trim(entry);
        if (entry.empty())
            throw ConfigError("empty entry in '" + key + "' list", line);
        std::stringstream es(entry);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(es, part, ':')) parts.push_back(trim(part));
        if (parts.size() != 3)
            throw ConfigError("'" + key + "' entries must be k:amplitude:phase, got '" + entry +
                                  "'",
                              line);
        InitMode m;
        m.k = static_cast<int>(parse_int(parts[0], key, line));
        m.amplitude = parse_real(parts[1], key, line);
        m.phase = parse_real(parts[2], key, line);
        modes.push_back(m);
    }
    if (modes.empty()) throw ConfigError("'" + key + "' list is empty", line);
    return modes;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    bool alpha_given = false;

    std::stringstream stream(text);
    std::string raw;
    int line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (content.empty()) continue;

        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value', got '" + content + "'", line);
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key before '='", line);
        if (value.empty()) throw ConfigError("missing value for '" + key + "'", line);
        if (!seen.insert(key).second)
            throw ConfigError("duplicate key '" + key + "'", line);

        if (key == "grid_n") {
            cfg.grid_n = static_cast<int>(parse_int(value, key, line));
        } else if (key == "dt") {
            cfg.dt = parse_real(value, key, line);
        } else if (key == "t_end") {
            cfg.t_end = parse_real(value, key, line);
        } else if (key == "delta") {
            cfg.delta = parse_real(value, key, line);
        } else if (key == "beta") {
            cfg.beta = parse_real(value, key, line);
        } else if (key == "epsilon") {
            cfg.epsilon = parse_real(value, key, line);
        } else if (key == "alpha1") {
            cfg.alpha1 = parse_real(value, key, line);
            alpha_given = true;
        } else if (key == "alpha2") {
            cfg.alpha2 = parse_real(value, key, line);
            alpha_given = true;
        } else if (key == "variant") {
            cfg.variant = value;
        } else if (key == "init") {
            cfg.init_modes = parse_modes(value, key, line);
        } else if (key == "init_ft") {
            cfg.init_ft_modes = parse_modes(value, key, line);
        } else if (key == "snapshot_every") {
            cfg.snapshot_every = static_cast<int>(parse_int(value, key, line));
        } else if (key == "diagnostics_every") {
            cfg.diagnostics_every = static_cast<int>(parse_int(value, key, line));
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(value, key, line));
            cfg.seed_set = true;
        } else {
            throw ConfigError("unknown key '" + key + "'", line);
        }
    }

    // The simplified (and linear) model ties the damping pair to delta
    // unless the config explicitly overrides it.
    if (!alpha_given && cfg.variant != "full") cfg.alpha1 = cfg.alpha2 = cfg.delta;

    cfg.validate();
    return cfg;
}

ModelParams RunConfig::params() const {
    ModelParams p;
    p.delta = delta;
    p.beta = beta;
    p.epsilon = epsilon;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    if (variant == "linear")
        p.variant = ModelVariant::Linear;
    else if (variant == "simplified")
        p.variant = ModelVariant::Simplified;
    else if (variant == "full")
        p.variant = ModelVariant::Full;
    else
        throw ConfigError("variant must be linear, simplified or full, got '" + variant + "'");
    p.validate();
    return p;
}

void RunConfig::validate() const {
    if (grid_n % 2 != 0) throw ConfigError("grid_n must be even, got " + std::to_string(grid_n));
    if (grid_n < 8) throw ConfigError("grid_n must be >= 8, got " + std::to_string(grid_n));
    if (t_end <= 0.0) throw ConfigError("t_end must be positive");
    if (dt < 0.0) throw ConfigError("dt must be >= 0 (0 selects the default)");
    if (snapshot_every <= 0 || diagnostics_every <= 0)
        throw ConfigError("snapshot_every and diagnostics_every must be positive");

    const int band = Grid(grid_n).dealias_cutoff();
    for (const auto* list : {&init_modes, &init_ft_modes}) {
        for (const InitMode& m : *list) {
            if (m.k < 1)
                throw ConfigError("init mode k must be >= 1, got " + std::to_string(m.k));
            if (m.k > band)
                throw ConfigError("init mode k=" + std::to_string(m.k) +
                                  " exceeds dealias band " + std::to_string(band));
        }
    }

    params(); // parameter/variant constraints
}

namespace {

SpectralField field_from_modes(const std::vector<InitMode>& modes, const Grid& grid) {
    SpectralField f(grid);
    for (const InitMode& m : modes) {
        // amp*cos(kx + phase) = (amp/2) e^{i phase} e^{ikx} + conj.
        const Complex c = 0.5 * m.amplitude * std::polar(1.0, m.phase);
        f.set_coeff(m.k, f.coeff(m.k) + c);
        f.set_coeff(-m.k, f.coeff(-m.k) + std::conj(c));
    }
    return f;
}

SpectralField random_field(std::uint64_t seed, const Grid& grid) {
    // Documented stream: for k = 1..dealias_cutoff in ascending order draw one
    // 64-bit word from mt19937_64(seed); the top 53 bits give the uniform
    // phase in [0, 2*pi). Magnitudes are deterministic: 1e-2 * k^-3.
    std::mt19937_64 rng(seed);
    SpectralField f(grid);
    for (int k = 1; k <= grid.dealias_cutoff(); ++k) {
        const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
        const Complex c =
            0.5 * kRandomInitAmplitude * std::pow(k, -3.0) * std::polar(1.0, 2.0 * Grid::pi() * u);
        f.set_coeff(k, c);
        f.set_coeff(-k, std::conj(c));
    }
    return f;
}

} // namespace

WaveState build_initial_state(const RunConfig& cfg, const Grid& grid) {
    SpectralField f0 = !cfg.init_modes.empty() ? field_from_modes(cfg.init_modes, grid)
                       : cfg.seed_set          ? random_field(cfg.seed, grid)
                                               : SpectralField(grid);
    SpectralField f1 = field_from_modes(cfg.init_ft_modes, grid);
    return {project_mean_zero(f0), project_mean_zero(f1), 0.0};
}

} // namespace vww
