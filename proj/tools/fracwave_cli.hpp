#pragma once
// Command-line front end: dispersion, simulate, check-bound, media, verify.
//
// Exit codes: 0 success, 1 bound violated / verification failed,
// 2 bad flags or invalid parameters, 3 numerical failure (non-convergence,
// instability, non-steady measurement).

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracwave/fracwave.hpp"
#include "fracwave/verify/acceptance.hpp"

namespace fracwave::cli {

#ifdef FRACWAVE_VERSION
inline constexpr const char* tool_version = FRACWAVE_VERSION;
#else
inline constexpr const char* tool_version = "0.0.0";
#endif

inline constexpr int exit_ok = 0;
inline constexpr int exit_violated = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

/// 17 significant digits: enough to round-trip a double, and byte-stable.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Shortest representation that round-trips (for human-facing tables).
inline std::string shortest(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ConfigError("cannot write '" + tmp + "'");
        }
        f << content;
        if (!f) {
            throw ConfigError("write to '" + tmp + "' failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline nlohmann::ordered_json manifest(const std::string& command,
                                       const nlohmann::ordered_json& parameters) {
    nlohmann::ordered_json m;
    m["command"] = command;
    m["parameters"] = parameters;
    m["tool_version"] = tool_version;
    m["timestamp"] = utc_timestamp();
    return m;
}

/// --media-file wins over FRACWAVE_MEDIA_FILE.
inline std::optional<std::string> resolve_media_file(const std::string& flag) {
    if (!flag.empty()) {
        return flag;
    }
    if (const char* env = std::getenv("FRACWAVE_MEDIA_FILE"); env != nullptr && *env != '\0') {
        return std::string(env);
    }
    return std::nullopt;
}

inline std::vector<MediaEntry> all_media(const std::optional<std::string>& file) {
    auto media = builtin_media();
    if (file) {
        for (auto& e : load_media(*file)) {
            media.push_back(std::move(e));
        }
    }
    return media;
}

inline std::string media_names(const std::vector<MediaEntry>& media) {
    std::string s;
    for (const auto& m : media) {
        s += (s.empty() ? "" : ", ") + m.name;
    }
    return s;
}

// ---------------------------------------------------------------------------
// dispersion

struct DispersionArgs {
    double c0 = 1.0;
    std::optional<double> gamma;
    std::optional<double> eta;
    std::optional<double> s;
    std::string medium;
    double omega_min = 1.0;
    double omega_max = 10.0;
    std::size_t points = 16;
    std::string out;
    std::string media_file;
    bool no_continuation = false;
};

inline void add_dispersion(CLI::App& app, DispersionArgs& a) {
    app.add_option("--c0", a.c0, "Small-signal sound speed (default 1)");
    app.add_option("--gamma", a.gamma, "Loss constant gamma >= 0");
    app.add_option("--eta", a.eta, "Temporal loss order, 0 < eta <= 3, eta != 2");
    app.add_option("--s", a.s, "Spatial loss order, 0 <= s <= 2");
    app.add_option("--medium", a.medium,
                   "Named medium (built-in or from the media file); requires --eta and uses SI "
                   "prefactors, so pass --c0 and frequencies in SI units");
    app.add_option("--omega-min", a.omega_min, "Lowest angular frequency (default 1)");
    app.add_option("--omega-max", a.omega_max, "Highest angular frequency (default 10)");
    app.add_option("--points", a.points, "Number of log-spaced frequencies (default 16)");
    app.add_option("--out", a.out, "Write CSV to FILE (plus FILE.manifest.json) instead of stdout");
    app.add_option("--media-file", a.media_file,
                   "Extra media table (default: $FRACWAVE_MEDIA_FILE)");
    app.add_flag("--no-continuation", a.no_continuation,
                 "Seed every root from the lossless wavenumber instead of the previous root");
}

inline Medium dispersion_medium(const DispersionArgs& a) {
    if (!a.medium.empty()) {
        if (!a.eta) {
            throw ConfigError("--medium requires --eta");
        }
        if (a.gamma || a.s) {
            throw ConfigError("--medium cannot be combined with --gamma or --s");
        }
        const auto media = all_media(resolve_media_file(a.media_file));
        const auto hit = find_medium(media, a.medium);
        if (!hit) {
            throw ConfigError("unknown medium '" + a.medium + "'; available: " +
                              media_names(media));
        }
        const SiAttenuation si = to_si(hit->attenuation);
        return medium_from_power_law(si.alpha0, si.y, a.c0, *a.eta, hit->name);
    }
    if (!a.gamma || !a.eta || !a.s) {
        throw ConfigError("dispersion requires --gamma, --eta and --s (or --medium with --eta)");
    }
    return Medium(a.c0, *a.gamma, *a.eta, *a.s);
}

inline int cmd_dispersion(const DispersionArgs& a, std::ostream& out) {
    const Medium m = dispersion_medium(a);
    if (a.points < 3) {
        throw ConfigError("--points must be at least 3");
    }
    const auto omegas = log_spaced(a.omega_min, a.omega_max, a.points);
    SweepOptions opts;
    opts.continuation = !a.no_continuation;
    const ComparisonTable table = compare_dispersion(m, omegas, opts);

    std::ostringstream csv;
    csv << "# fracwave dispersion c0=" << fmt17(m.c0()) << " gamma=" << fmt17(m.gamma())
        << " eta=" << fmt17(m.eta()) << " s=" << fmt17(m.s()) << '\n';
    csv << "omega,k_re,k_im,alpha_root,alpha_asymptotic,rel_gap\n";
    for (const auto& r : table.rows) {
        csv << fmt17(r.omega) << ',' << fmt17(r.k.real()) << ',' << fmt17(r.k.imag()) << ','
            << fmt17(r.alpha_root) << ',' << fmt17(r.alpha_asymptotic) << ','
            << (r.relative_gap ? fmt17(*r.relative_gap) : std::string("nan")) << '\n';
    }
    if (table.fit) {
        csv << "# y_fit=" << fmt17(table.fit->y) << '\n';
    } else {
        csv << "# y_fit=undefined\n";
    }
    csv << "# y_analytic=" << fmt17(table.y_analytic) << '\n';
    csv << "# y_diff=" << (table.fit ? fmt17(table.fit->y - table.y_analytic) : "undefined")
        << '\n';

    if (a.out.empty()) {
        out << csv.str();
    } else {
        nlohmann::ordered_json params;
        params["c0"] = m.c0();
        params["gamma"] = m.gamma();
        params["eta"] = m.eta();
        params["s"] = m.s();
        params["medium"] = a.medium;
        params["omega_min"] = a.omega_min;
        params["omega_max"] = a.omega_max;
        params["points"] = a.points;
        params["continuation"] = !a.no_continuation;
        write_atomic(a.out, csv.str());
        write_atomic(a.out + ".manifest.json", manifest("dispersion", params).dump(2) + "\n");
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
    std::string equation;
    double lambda = 2.0;
    double beta = 1.0;
    double kappa = 1.0;
    double c0 = 1.0;
    double gamma = 0.0;
    double eta = 1.0;
    double s = 2.0;
    std::size_t n = 256;
    double length = 2.0 * pi;
    std::optional<double> dt;
    std::size_t steps = 1000;
    std::size_t snapshot_every = 1;
    std::string initial = "sine";
    long mode = 1;
    double amplitude = 1.0;
    std::optional<double> source_omega;
    std::optional<double> source_x;
    std::optional<double> source_width;
    std::optional<double> window_min;
    std::optional<double> window_max;
    std::string out_prefix;
};

inline void add_simulate(CLI::App& app, SimulateArgs& a) {
    app.add_option("--equation", a.equation, "Model to integrate")
        ->required()
        ->check(CLI::IsMember({"fdwe", "lossy", "telegrapher", "thermoviscous", "burgers"}));
    app.add_option("--lambda", a.lambda, "FDWE/Burgers spatial order (default 2)");
    app.add_option("--beta", a.beta, "FDWE/Burgers temporal order (default 1)");
    app.add_option("--kappa", a.kappa, "FDWE/Burgers diffusivity (default 1)");
    app.add_option("--c0", a.c0, "Lossy wave speed (default 1)");
    app.add_option("--gamma", a.gamma, "Lossy loss constant (default 0)");
    app.add_option("--eta", a.eta, "Lossy temporal order (default 1)");
    app.add_option("--s", a.s, "Lossy spatial order (default 2)");
    app.add_option("--n", a.n, "Grid points, power of two >= 8 (default 256)");
    app.add_option("--length", a.length, "Periodic domain length (default 2*pi)");
    app.add_option("--dt", a.dt,
                   "Time step (default 1e-3 for fdwe/burgers, 0.5*dx/c0 for wave models; "
                   "reduced so a source period is a whole number of steps)");
    app.add_option("--steps", a.steps, "Number of time steps (default 1000)");
    app.add_option("--snapshot-every", a.snapshot_every, "Snapshot cadence in steps (default 1)");
    app.add_option("--initial", a.initial, "Initial condition: sine, gaussian or zero")
        ->check(CLI::IsMember({"sine", "gaussian", "zero"}));
    app.add_option("--mode", a.mode, "Mode number of the sine initial condition (default 1)");
    app.add_option("--amplitude", a.amplitude, "Initial amplitude (default 1)");
    app.add_option("--source-omega", a.source_omega,
                   "Angular frequency of a monochromatic source (wave models only)");
    app.add_option("--source-x", a.source_x, "Source position (default length/10)");
    app.add_option("--source-width", a.source_width, "Gaussian source width (default wavelength/10)");
    app.add_option("--window-min", a.window_min,
                   "Start of the attenuation fit window (default source-x + 1 wavelength)");
    app.add_option("--window-max", a.window_max,
                   "End of the attenuation fit window (default window-min + 12 wavelengths)");
    app.add_option("--out-prefix", a.out_prefix, "Prefix for output files")->required();
}

inline int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const Grid1D grid(a.n, a.length);
    const bool wave_model = a.equation != "fdwe" && a.equation != "burgers";
    if (a.source_omega && !wave_model) {
        throw ConfigError("--source-omega applies to lossy, telegrapher and thermoviscous only");
    }

    std::optional<Medium> medium;
    if (a.equation == "lossy") {
        medium.emplace("lossy", a.c0, a.gamma, a.eta, a.s);
    } else if (a.equation == "telegrapher") {
        medium.emplace("telegrapher", a.c0, a.gamma, 1.0, 0.0);
    } else if (a.equation == "thermoviscous") {
        medium.emplace("thermoviscous", a.c0, a.gamma, 1.0, 2.0);
    }

    double dt = a.dt.value_or(wave_model ? 0.5 * grid.dx() / a.c0 : 1e-3);
    std::optional<MonochromaticSource> source;
    double wavelength = 0.0;
    if (a.source_omega) {
        const double w = *a.source_omega;
        if (!(w > 0.0)) {
            throw ConfigError("--source-omega must be positive");
        }
        dt = harmonic_time_step(w, dt);
        wavelength = 2.0 * pi * a.c0 / w;
        source = MonochromaticSource{w, a.source_x.value_or(a.length / 10.0),
                                     a.source_width.value_or(wavelength / 10.0)};
    }
    const SolverConfig cfg(dt, a.steps, a.snapshot_every);

    Field u0 = Field::zeros(grid);
    if (a.initial == "sine") {
        const double k = 2.0 * pi * static_cast<double>(a.mode) / a.length;
        u0 = Field::sample(grid, [&](double x) { return a.amplitude * std::sin(k * x); });
    } else if (a.initial == "gaussian") {
        const double c = a.length / 2.0;
        const double w = a.length / 20.0;
        u0 = Field::sample(grid, [&](double x) {
            return a.amplitude * std::exp(-0.5 * (x - c) * (x - c) / (w * w));
        });
    }
    const Field zero = Field::zeros(grid);

    Trajectory traj(dt);
    if (a.equation == "fdwe") {
        const FdweParams p(a.lambda, a.beta, a.kappa);
        traj = solve_fdwe(u0, p.beta() > 1.0 ? std::optional<Field>(zero) : std::nullopt, p, cfg);
    } else if (a.equation == "burgers") {
        traj = solve_fractional_burgers(u0, FdweParams(a.lambda, a.beta, a.kappa), cfg);
    } else {
        traj = solve_lossy_wave(u0, zero, *medium, cfg, source);
    }

    std::ostringstream snaps;
    snaps << "t,x,value\n";
    for (const Snapshot& s : traj.snapshots()) {
        for (std::size_t i = 0; i < grid.n(); ++i) {
            snaps << fmt17(s.t) << ',' << fmt17(grid.x(i)) << ',' << fmt17(s.field[i]) << '\n';
        }
    }
    write_atomic(a.out_prefix + "_snapshots.csv", snaps.str());

    nlohmann::ordered_json params;
    params["equation"] = a.equation;
    if (medium) {
        params["c0"] = medium->c0();
        params["gamma"] = medium->gamma();
        params["eta"] = medium->eta();
        params["s"] = medium->s();
    } else {
        params["lambda"] = a.lambda;
        params["beta"] = a.beta;
        params["kappa"] = a.kappa;
    }
    params["n"] = a.n;
    params["length"] = a.length;
    params["dt"] = dt;
    params["steps"] = a.steps;
    params["snapshot_every"] = a.snapshot_every;
    params["initial"] = a.initial;
    params["mode"] = a.mode;
    params["amplitude"] = a.amplitude;

    if (source) {
        const double wmin = a.window_min.value_or(source->x + wavelength);
        const double wmax = a.window_max.value_or(std::min(wmin + 12.0 * wavelength, a.length));
        params["source_omega"] = source->omega;
        params["source_x"] = source->x;
        params["source_width"] = source->width;
        params["window"] = {wmin, wmax};
        const AttenuationMeasurement m = measure_spatial_attenuation(traj, source->omega, {wmin, wmax});
        std::ostringstream mcsv;
        mcsv << "omega,alpha_measured,x_min,x_max,r_squared,k_measured\n";
        mcsv << fmt17(m.omega) << ',' << fmt17(m.alpha_measured) << ',' << fmt17(wmin) << ','
             << fmt17(wmax) << ',' << fmt17(m.r_squared) << ',' << fmt17(m.wavenumber_measured)
             << '\n';
        write_atomic(a.out_prefix + "_measurement.csv", mcsv.str());
        out << "alpha_measured=" << fmt17(m.alpha_measured) << '\n';
    }
    write_atomic(a.out_prefix + "_manifest.json", manifest("simulate", params).dump(2) + "\n");
    out << "wrote " << traj.size() << " snapshots to " << a.out_prefix << "_snapshots.csv\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// check-bound

struct BoundArgs {
    double lambda = 0.0;
    double beta = 0.0;
};

inline int cmd_check_bound(const BoundArgs& a, std::ostream& out) {
    const BoundVerdict v = check_order_bound(a.lambda, a.beta);
    nlohmann::ordered_json j;
    j["satisfied"] = v.satisfied;
    j["regime"] = std::string(to_string(v.regime));
    j["implied_y"] = v.implied_y;
    out << j.dump() << '\n';
    return v.satisfied ? exit_ok : exit_violated;
}

// ---------------------------------------------------------------------------
// media

struct MediaArgs {
    std::string media_file;
    std::string name;
    std::optional<double> alpha0_db;
    std::optional<double> y;
    double alpha0_si = 0.0;
    double c0 = 1.0;
    double eta = 1.0;
};

inline int cmd_media_list(const MediaArgs& a, std::ostream& out) {
    const auto media = all_media(resolve_media_file(a.media_file));
    out << "name alpha0_db_per_cm_per_MHz_y y\n";
    for (const auto& m : media) {
        const auto& att = m.attenuation;
        out << m.name << ' ' << (att.has_prefactor() ? shortest(*att.alpha0_db()) : "-") << ' '
            << shortest(att.y()) << (att.has_prefactor() ? "" : " (exponent only)") << '\n';
    }
    return exit_ok;
}

inline int cmd_media_convert(const MediaArgs& a, std::ostream& out) {
    std::optional<ClinicalAttenuation> c;
    if (!a.name.empty()) {
        const auto media = all_media(resolve_media_file(a.media_file));
        const auto hit = find_medium(media, a.name);
        if (!hit) {
            throw ConfigError("unknown medium '" + a.name + "'; available: " + media_names(media));
        }
        c = hit->attenuation;
    } else if (a.alpha0_db && a.y) {
        c = ClinicalAttenuation(*a.alpha0_db, *a.y);
    } else {
        throw ConfigError("convert needs --name or both --alpha0-db and --y");
    }
    const SiAttenuation si = to_si(*c);
    out << "alpha0_np_per_m_per_rad_s_y,y\n" << fmt17(si.alpha0) << ',' << fmt17(si.y) << '\n';
    return exit_ok;
}

inline int cmd_media_invert(const MediaArgs& a, std::ostream& out) {
    if (!a.y) {
        throw ConfigError("invert needs --y");
    }
    const Medium m = medium_from_power_law(a.alpha0_si, *a.y, a.c0, a.eta);
    out << "c0,gamma,eta,s\n"
        << fmt17(m.c0()) << ',' << fmt17(m.gamma()) << ',' << fmt17(m.eta()) << ','
        << fmt17(m.s()) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    bool quick = false;
    std::string media_file;
    std::string json_out;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    verify::AcceptanceOptions opts;
    opts.quick = a.quick;
    opts.media_file = resolve_media_file(a.media_file);
    const auto results = verify::run_acceptance(opts);
    nlohmann::ordered_json summary;
    summary["quick"] = a.quick;
    summary["criteria"] = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
        out << verify::format_result(r) << '\n';
        all = all && r.passed;
        summary["criteria"].push_back(
            {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    summary["all_passed"] = all;
    out << summary.dump() << '\n';
    if (!a.json_out.empty()) {
        write_atomic(a.json_out, summary.dump(2) + "\n");
    }
    if (!all) {
        out << "failing criteria:";
        for (const auto& r : results) {
            if (!r.passed) {
                out << " #" << r.id;
            }
        }
        out << '\n';
    }
    return all ? exit_ok : exit_violated;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fracwave: fractional diffusion-wave and power-law lossy wave toolkit",
                 "fracwave"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    DispersionArgs disp;
    auto* disp_cmd = app.add_subcommand("dispersion", "Complex wavenumbers and attenuation sweep");
    add_dispersion(*disp_cmd, disp);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run a time-domain solver");
    add_simulate(*sim_cmd, sim);

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("check-bound", "Check -1 <= lambda - beta <= 1");
    bound_cmd->add_option("--lambda", bound.lambda, "Spatial order")->required();
    bound_cmd->add_option("--beta", bound.beta, "Temporal order")->required();

    MediaArgs media;
    auto* media_cmd = app.add_subcommand("media", "Power-law media table and unit conversion");
    media_cmd->require_subcommand(1);
    media_cmd->add_option("--media-file", media.media_file,
                          "Extra media table (default: $FRACWAVE_MEDIA_FILE)");
    auto* list_cmd = media_cmd->add_subcommand("list", "List built-in and loaded media");
    auto* convert_cmd = media_cmd->add_subcommand("convert", "Clinical units to SI");
    convert_cmd->add_option("--name", media.name, "Medium name");
    convert_cmd->add_option("--alpha0-db", media.alpha0_db, "Prefactor in dB/cm/MHz^y");
    convert_cmd->add_option("--y", media.y, "Power-law exponent");
    auto* invert_cmd = media_cmd->add_subcommand("invert", "Build a lossy medium from a power law");
    invert_cmd->add_option("--alpha0-si", media.alpha0_si, "Prefactor in Np/m/(rad/s)^y")
        ->required();
    invert_cmd->add_option("--y", media.y, "Power-law exponent")->required();
    invert_cmd->add_option("--c0", media.c0, "Sound speed (default 1)");
    invert_cmd->add_option("--eta", media.eta, "Temporal loss order (default 1)");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
    verify_cmd->add_flag("--quick", ver.quick, "Smaller grids and looser documented tolerances");
    verify_cmd->add_option("--media-file", ver.media_file,
                           "Media table to load (default: $FRACWAVE_MEDIA_FILE or built-in)");
    verify_cmd->add_option("--json", ver.json_out, "Also write the JSON summary to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        CLI::App* target = &app;
        for (auto* sub : app.get_subcommands()) {
            target = sub;
        }
        err << target->help();
        return exit_usage;
    }

    try {
        if (disp_cmd->parsed()) {
            return cmd_dispersion(disp, out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim, out);
        }
        if (bound_cmd->parsed()) {
            return cmd_check_bound(bound, out);
        }
        if (media_cmd->parsed()) {
            if (list_cmd->parsed()) {
                return cmd_media_list(media, out);
            }
            if (convert_cmd->parsed()) {
                return cmd_media_convert(media, out);
            }
            return cmd_media_invert(media, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(ver, out);
        }
    } catch (const InstabilityError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const BranchError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const SweepError& e) {
        err << "error: convergence failure at omega=" << fmt17(e.omega()) << ": " << e.what()
            << '\n';
        return exit_numerical;
    } catch (const TransientError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const InsufficientDataError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("fracwave");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace fracwave::cli
