#include "vww/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vww/checks.hpp"
#include "vww/config.hpp"
#include "vww/dispersion.hpp"
#include "vww/snapshot.hpp"
#include "vww/timestepper.hpp"

namespace vww {

namespace {

namespace fs = std::filesystem;

std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Fixed schema so downstream tooling needs no negotiation.
constexpr const char* kCsvHeader =
    "t,h1,h2,h3,h35,h4,h45,h5,h55,ft225,ft3,ft35,ft4,ft45,e_inst,e_max,dissipation,e_linear";

void write_csv_row(std::ostream& out, const DiagnosticsRecord& rec) {
    out << format_g17(rec.t);
    for (double v : rec.h_norms) out << ',' << format_g17(v);
    for (double v : rec.ft_norms) out << ',' << format_g17(v);
    out << ',' << format_g17(rec.e_inst) << ',' << format_g17(rec.e_max) << ','
        << format_g17(rec.dissipation) << ',' << format_g17(rec.e_linear) << '\n';
}

int run_simulate(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const RunConfig cfg = parse_config(ss.str());
    const ModelParams p = cfg.params();
    const Grid grid(cfg.grid_n);

    fs::create_directories(cfg.output_dir);
    std::ofstream csv(fs::path(cfg.output_dir) / "diagnostics.csv");
    if (!csv) throw Error("cannot create diagnostics.csv in '" + cfg.output_dir + "'");
    csv << kCsvHeader << '\n';

    int snap_index = 0;
    SimSink sink;
    sink.on_snapshot = [&](const WaveState& s) {
        char name[32];
        std::snprintf(name, sizeof name, "snap_%06d.vwav", snap_index++);
        write_snapshot(s, p, fs::path(cfg.output_dir) / name);
    };
    sink.on_diagnostics = [&](const DiagnosticsRecord& rec) { write_csv_row(csv, rec); };

    SimConfig sim;
    sim.dt = cfg.dt;
    sim.t_end = cfg.t_end;
    sim.snapshot_every = cfg.snapshot_every;
    sim.diagnostics_every = cfg.diagnostics_every;

    const WaveState final = simulate(build_initial_state(cfg, grid), p, sim, sink);
    csv.flush();
    if (!csv) throw Error("writing diagnostics.csv failed");
    std::cout << "completed run to t=" << final.t << ", wrote " << snap_index
              << " snapshots and diagnostics.csv to " << cfg.output_dir << "\n";
    return 0;
}

int run_dispersion(double delta, double beta, int kmax) {
    std::cout << "k,re_lambda,im_lambda,decay_measured,freq_measured\n";
    for (const DispersionRow& row : measure_dispersion(delta, beta, kmax)) {
        std::cout << row.k << ',' << format_g17(row.re_lambda) << ','
                  << format_g17(row.im_lambda) << ',' << format_g17(row.decay_measured) << ','
                  << format_g17(row.freq_measured) << '\n';
    }
    return 0;
}

int run_apply(const std::string& op, const std::string& in_path, const std::string& out_path) {
    auto [state, params] = read_snapshot(in_path);

    auto apply_op = [&](const SpectralField& f) {
        if (op == "hilbert") return hilbert(f);
        if (op.rfind("lambda:", 0) == 0) {
            const double s = std::stod(op.substr(7));
            return lambda_pow(f, s);
        }
        if (op.rfind("dx:", 0) == 0) {
            const int n = std::stoi(op.substr(3));
            if (n < 0) throw ConfigError("dx order must be nonnegative");
            return derivative(f, n);
        }
        throw ConfigError("unknown operator '" + op + "' (use hilbert, lambda:S or dx:N)");
    };

    state.f = apply_op(state.f);
    state.ft = apply_op(state.ft);
    write_snapshot(state, params, out_path);
    return 0;
}

int run_verify() {
    const std::vector<CheckResult> results = run_builtin_checks();
    for (const CheckResult& r : results) {
        const char* tag = r.pass ? "PASS" : (r.warn_only ? "WARN" : "FAIL");
        std::printf("[%s] %2d. %s — %s\n", tag, r.id, r.name.c_str(), r.detail.c_str());
    }
    return all_passed(results) ? 0 : 1;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Pseudospectral simulator for a nonlocal fourth-order damped water-wave "
                 "equation on the torus"};
    app.require_subcommand(1);

    std::string config_path;
    auto* sim = app.add_subcommand("simulate", "run a simulation from a config file");
    sim->add_option("--config", config_path, "path to a key = value config file")->required();

    double delta = 0.1, beta = 0.0;
    int kmax = 8;
    auto* disp =
        app.add_subcommand("dispersion", "analytic vs measured linear dispersion, CSV to stdout");
    disp->add_option("--delta", delta, "viscous damping");
    disp->add_option("--beta", beta, "Bond number");
    disp->add_option("--kmax", kmax, "largest wavenumber to report");

    std::string op, in_path, out_path;
    auto* apply = app.add_subcommand("apply", "apply a Fourier multiplier to a snapshot");
    apply->add_option("--op", op, "hilbert | lambda:S | dx:N")->required();
    apply->add_option("--in", in_path, "input snapshot")->required();
    apply->add_option("--out", out_path, "output snapshot")->required();

    auto* verify = app.add_subcommand("verify", "run the built-in oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return run_simulate(config_path);
        if (disp->parsed()) return run_dispersion(delta, beta, kmax);
        if (apply->parsed()) return run_apply(op, in_path, out_path);
        if (verify->parsed()) return run_verify();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BlowUpError& e) {
        std::cerr << "blow-up: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace vww
