// Scenario runner: parses a JSON config, dispatches to the library, and
// writes deterministic CSV or JSON artifacts (see README for the config
// dialect).
#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gravcat/aqt.hpp"
#include "gravcat/constants.hpp"
#include "gravcat/ggp.hpp"
#include "gravcat/params.hpp"
#include "gravcat/qubit_pair.hpp"
#include "gravcat/rotor.hpp"
#include "gravcat/semiclassical.hpp"
#include "gravcat/two_mode.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Output {
    std::string header_extra;  // extra "# key: value" lines
    std::vector<std::string> columns;  // "name [unit]"
    std::vector<std::vector<double>> rows;
    std::vector<std::vector<std::string>> text_rows;  // used instead when non-numeric
};

void write_output(const Output& out, const json& config, const std::string& scenario,
                  const std::string& path, const std::string& format) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    const std::string canonical = config.dump();
    if (format == "csv") {
        f << "# gravcat " << kVersion << "\n";
        f << "# scenario: " << scenario << "\n";
        char hash[32];
        std::snprintf(hash, sizeof hash, "%016" PRIx64, fnv1a(canonical));
        f << "# config-hash: " << hash << "\n";
        f << "# config: " << canonical << "\n";
        if (!out.header_extra.empty()) f << out.header_extra;
        for (std::size_t i = 0; i < out.columns.size(); ++i)
            f << (i ? "," : "") << out.columns[i];
        f << "\n";
        if (!out.text_rows.empty()) {
            for (const auto& r : out.text_rows) {
                for (std::size_t i = 0; i < r.size(); ++i) f << (i ? "," : "") << r[i];
                f << "\n";
            }
        } else {
            for (const auto& r : out.rows) {
                for (std::size_t i = 0; i < r.size(); ++i) f << (i ? "," : "") << fmt(r[i]);
                f << "\n";
            }
        }
    } else {
        json j;
        j["gravcat"] = kVersion;
        j["scenario"] = scenario;
        char hash[32];
        std::snprintf(hash, sizeof hash, "%016" PRIx64, fnv1a(canonical));
        j["config_hash"] = hash;
        j["config"] = config;
        j["columns"] = out.columns;
        if (!out.text_rows.empty())
            j["rows"] = out.text_rows;
        else {
            json rows = json::array();
            for (const auto& r : out.rows) {
                json row = json::array();
                for (double v : r) row.push_back(fmt(v));
                rows.push_back(row);
            }
            j["rows"] = rows;
        }
        f << j.dump(2) << "\n";
    }
}

// ---- strict config access ----

class Config {
  public:
    Config(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw std::runtime_error("config node " + path_ + " must be an object");
    }

    double num(const std::string& key) {
        require(key);
        return j_.at(key).get<double>();
    }
    double num_or(const std::string& key, double fallback) {
        if (!j_.contains(key)) return fallback;
        return num(key);
    }
    int integer(const std::string& key) {
        require(key);
        return j_.at(key).get<int>();
    }
    int integer_or(const std::string& key, int fallback) {
        if (!j_.contains(key)) return fallback;
        return integer(key);
    }
    std::string str(const std::string& key) {
        require(key);
        return j_.at(key).get<std::string>();
    }
    std::string str_or(const std::string& key, const std::string& fallback) {
        if (!j_.contains(key)) return fallback;
        return str(key);
    }
    std::vector<double> num_array(const std::string& key) {
        require(key);
        return j_.at(key).get<std::vector<double>>();
    }

    /// Call after all reads: every untouched key is an error.
    void finish() const {
        std::vector<std::string> unknown;
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) unknown.push_back(path_ + "/" + it.key());
        if (!unknown.empty()) {
            std::string msg = "unknown config keys:";
            for (const auto& k : unknown) msg += " " + k;
            throw std::runtime_error(msg);
        }
    }

  private:
    void require(const std::string& key) {
        if (!j_.contains(key))
            throw std::runtime_error("missing config key " + path_ + "/" + key);
        seen_.insert(key);
    }
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

// ---- scenarios ----

Output run_qubit_evolve(Config& c) {
    gravcat::QubitPairModel model{c.num("omega"), c.num("uu")};
    model.validate();
    const double t_max = c.num("t_max");
    const int n = c.integer_or("n_steps", 200);
    const std::string init = c.str_or("initial", "eg");
    c.finish();
    gravcat::TwoQubitState s0 = init == "ee"   ? gravcat::TwoQubitState::ee()
                                : init == "gg" ? gravcat::TwoQubitState::gg()
                                : init == "ge" ? gravcat::TwoQubitState::ge()
                                               : gravcat::TwoQubitState::eg();
    Output out;
    out.columns = {"t [s]", "p_ee [1]", "p_gg [1]", "p_eg [1]", "p_ge [1]",
                   "purity_deficit [1]"};
    for (int i = 0; i <= n; ++i) {
        const double t = t_max * i / n;
        const auto s = gravcat::evolve(model, s0, t);
        out.rows.push_back({t, std::norm(s.amplitudes(0)), std::norm(s.amplitudes(1)),
                            std::norm(s.amplitudes(2)), std::norm(s.amplitudes(3)),
                            gravcat::purity_deficit(s)});
    }
    return out;
}

Output run_qubit_ground(Config& c) {
    gravcat::QubitPairModel model{c.num("omega"), c.num("uu")};
    model.validate();
    c.finish();
    const auto g = gravcat::ground_state(model);
    Output out;
    out.columns = {"omega [rad/s]", "uu [rad/s]", "energy [rad/s]", "amp_ee [1]", "amp_gg [1]",
                   "purity_deficit [1]"};
    out.rows.push_back({model.omega, model.uu, -model.omega_prime(), g.amplitudes(0).real(),
                        g.amplitudes(1).real(), gravcat::purity_deficit(g)});
    return out;
}

Output run_semiclassical_overlaps(Config& c) {
    const double m = c.num("m"), Om = c.num("Omega"), L = c.num("L"), d = c.num("d");
    const int n_points = c.integer_or("n_points", 2001);
    c.finish();
    const auto mode = gravcat::gaussian_mode(m, Om, L, n_points);
    const auto ov = gravcat::overlap_coefficients(mode, d);
    const auto well = gravcat::quartic_well(m, Om, L);
    const auto as = gravcat::overlap_asymptotics(m, Om, L, d, gravcat::wkb_energy_split(well, m),
                                                 well);
    Output out;
    out.columns = {"gamma_plus [1/m]", "gamma_minus [1/m]", "gamma_0 [1/m]", "gamma_1 [1/m]",
                   "asym_sum [1/m]", "asym_diff [1/m]", "asym_gamma_0 [1/m]", "asym_gamma_1 [1/m]",
                   "refined_mho_over_alpha [1/m]"};
    out.rows.push_back({ov.gamma_plus, ov.gamma_minus, ov.gamma_0, ov.gamma_1,
                        as.overlaps.gamma_plus + as.overlaps.gamma_minus,
                        as.overlaps.gamma_plus - as.overlaps.gamma_minus, as.overlaps.gamma_0,
                        as.overlaps.gamma_1, as.refined_mho_over_alpha});
    return out;
}

Output run_wkb_vs_oracle(Config& c) {
    const double m = c.num("m"), Om = c.num("Omega");
    const auto Ls = c.num_array("L_values");
    const int n_grid = c.integer_or("n_grid", 4097);
    const double margin = c.num_or("margin", 4.0);
    c.finish();
    Output out;
    out.columns = {"L [m]", "omega_wkb [rad/s]", "omega_oracle [rad/s]", "log_ratio [1]",
                   "validity_ratio [1]"};
    for (double L : Ls) {
        const auto well = gravcat::quartic_well(m, Om, L);
        const double wkb = gravcat::wkb_energy_split(well, m);
        const double half = 0.5 * L + margin / std::sqrt(m * Om);
        const auto sp = gravcat::schrodinger_splitting_oracle(well, m,
                                                              gravcat::Grid1D(-half, half, n_grid),
                                                              1e-4);
        out.rows.push_back({L, wkb, sp.splitting(), std::log(wkb / sp.splitting()),
                            sp.validity_ratio()});
    }
    return out;
}

Output run_ggp_solve(Config& c) {
    gravcat::GGPProblem p;
    const double m = c.num("m"), Om = c.num("Omega"), L = c.num("L");
    p.well = gravcat::quartic_well(m, Om, L);
    p.m = m;
    p.g = c.num_or("g", 0.0);
    p.alpha = c.num_or("alpha", 0.0);
    p.N = c.integer_or("N", 1);
    p.eps = c.num_or("eps", 0.05 / std::sqrt(m * Om));
    const double x_max = c.num_or("x_max", 0.5 * L + 6.0 / std::sqrt(m * Om));
    const int n = c.integer_or("n", 513);
    const std::string state = c.str_or("state", "ground");
    c.finish();
    const gravcat::Grid1D grid(-x_max, x_max, n);
    const auto sol = state == "excited" ? gravcat::solve_first_excited(p, grid)
                                        : gravcat::solve_ground_state(p, grid);
    Output out;
    out.header_extra = "# mu: " + fmt(sol.mu) + "\n# energy: " + fmt(sol.energy) +
                       "\n# residual: " + fmt(sol.residual) +
                       "\n# iterations: " + std::to_string(sol.iterations) + "\n";
    out.columns = {"x [m]", "phi [1/sqrt(m)]"};
    for (int i = 0; i < n; ++i) out.rows.push_back({grid.x(i), sol.phi[i]});
    return out;
}

Output run_twomode_evolve(Config& c) {
    gravcat::TwoModeParams p;
    p.n = c.integer("N");
    p.omega_bar = c.num("omega_bar");
    p.kappa = c.num_or("kappa", 0.0);
    p.uu = c.num("uu");
    const double t_max = c.num("t_max");
    const int n_steps = c.integer_or("n_steps", 200);
    c.finish();
    const auto ops = gravcat::spin_operators(p.n);
    const int dim = p.n + 1;
    Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(dim);
    ground(0) = 1.0;  // Sz = -N: all particles in the lower mode
    const auto s0 = gravcat::BipartiteSpinState::product(p.n, ground, ground);
    Output out;
    out.columns = {"t [s]", "sx1 [1]", "sx2 [1]", "entropy [nat]", "n_left [1]", "n_right [1]"};
    for (int i = 0; i <= n_steps; ++i) {
        const double t = t_max * i / n_steps;
        const auto s = gravcat::evolve_bipartite(p, s0, t);
        Eigen::MatrixXcd psi(dim, dim);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) psi(a, b) = s.amplitudes(a * dim + b);
        const Eigen::MatrixXcd rho1 = psi * psi.adjoint();
        const Eigen::MatrixXcd rho2 = psi.transpose() * psi.conjugate();
        const double sx1 = (ops.sx * rho1).trace().real();
        const double sx2 = (ops.sx * rho2).trace().real();
        out.rows.push_back({t, sx1, sx2, gravcat::entanglement_entropy(s),
                            0.5 * (p.n - sx1), 0.5 * (p.n + sx1)});
    }
    return out;
}

gravcat::RotorParams rotor_params(Config& c) {
    return {c.num("N"), c.num("omega_bar"), c.num("b"), c.num("c")};
}
gravcat::RotorState rotor_state(Config& c) {
    return {c.num_or("xi1", 0.0), c.num_or("phi1", 0.0), c.num_or("xi2", 0.5),
            c.num_or("phi2", 0.0)};
}

Output run_rotor_simulate(Config& c) {
    const auto p = rotor_params(c);
    const auto s0 = rotor_state(c);
    const double t_end = c.num("t_end");
    const double dt = c.num_or("dt", 0.02 / p.omega_bar);
    const int stride = c.integer_or("record_stride", 10);
    c.finish();
    const auto traj = gravcat::integrate(p, s0, t_end, dt, stride);
    Output out;
    out.header_extra = "# max_drift: " + fmt(traj.max_drift) + "\n";
    out.columns = {"wt [1]", "xi1 [1]", "phi1 [rad]", "xi2 [1]", "phi2 [rad]",
                   "h1 [N*omega_bar]", "h2 [N*omega_bar]", "H [N*omega_bar]"};
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& s = traj.states[i];
        out.rows.push_back({p.omega_bar * traj.times[i], s.xi1, s.phi1, s.xi2, s.phi2, traj.h1[i],
                            traj.h2[i], traj.h_total[i]});
    }
    return out;
}

Output run_rotor_spectrum(Config& c) {
    const auto p = rotor_params(c);
    const double amp = c.num_or("amplitude", 0.05);
    c.finish();
    const auto nm = gravcat::normal_mode_frequencies(p);
    const double delta = std::max(std::abs(nm.delta), 1e-6 * p.omega_bar);
    const double t_end = 6.0 * 2.0 * M_PI / delta;
    const auto traj = gravcat::integrate(p, {0.0, 0.0, amp, 0.0}, t_end,
                                         0.02 * 2.0 * M_PI / nm.omega_plus, 20);
    const double beat = gravcat::dominant_frequency(traj.h1, traj.times[1] - traj.times[0]);
    Output out;
    out.columns = {"omega_plus [rad/s]", "omega_minus [rad/s]", "delta [rad/s]",
                   "delta_small_c [rad/s]", "fft_beat [rad/s]"};
    out.rows.push_back({nm.omega_plus, nm.omega_minus, nm.delta, nm.delta_small_c, beat});
    return out;
}

Output run_rotor_lyapunov(Config& c, unsigned seed) {
    const auto p = rotor_params(c);
    const auto s0 = rotor_state(c);
    const double t_end = c.num("t_end");
    c.finish();
    const auto est = gravcat::lyapunov_estimate(p, s0, t_end, seed);
    Output out;
    out.header_extra = "# lambda: " + fmt(est.lambda) + "\n";
    out.columns = {"k [1]", "running_lambda [1/s]"};
    for (std::size_t i = 0; i < est.trace.size(); ++i)
        out.rows.push_back({double(i + 1), est.trace[i]});
    return out;
}

Output run_aqt_compare(Config& c) {
    const double mass_amu = c.num_or("M_amu", 1e10);
    const double radius = c.num_or("R", 100e-9);
    const double theta = c.num_or("theta_planck", 1.0);
    const double de_ev = c.num_or("dE_eV", 1.0);
    c.finish();
    const double dp = gravcat::dp_rate(mass_amu * gravcat::PhysicalConstants::amu, radius);
    const double abh = gravcat::abh_rate(theta, de_ev * 1.602176634e-19);
    Output out;
    out.header_extra = "# dp_rate: " + fmt(dp) + "\n# abh_rate: " + fmt(abh) + "\n";
    out.columns = {"model", "simulated", "gravcats_survive", "note"};
    for (const auto& e : gravcat::comparator_table())
        out.text_rows.push_back({e.model, e.simulated ? "yes" : "no",
                                 e.gravcats_survive ? "yes" : "no", e.note});
    return out;
}

Output run_sweep(Config& c) {
    const auto masses = c.num_array("masses_amu");
    const double d = c.num("d");
    const double L = c.num("L");
    c.finish();
    Output out;
    out.columns = {"m [amu]", "mho [rad/s]", "period [s]"};
    for (double m_amu : masses) {
        const double m = m_amu * gravcat::PhysicalConstants::amu;
        const double alpha = gravcat::gravitational_coupling(m);
        const double mho = gravcat::rabi_frequency(alpha, d, L);
        out.rows.push_back({m_amu, mho, 2.0 * M_PI / mho});
    }
    return out;
}

std::vector<std::string> validate_config(const json& cfg) {
    std::vector<std::string> warnings;
    const std::string scenario = cfg.value("scenario", "");
    if (scenario == "rotor-simulate" || scenario == "rotor-spectrum" ||
        scenario == "rotor-lyapunov") {
        const double b = cfg.value("b", 0.0), c = cfg.value("c", 0.0);
        if (!(1.0 + b - std::abs(c) > 0.0))
            warnings.push_back("rotor stability violated: 1 + b - |c| <= 0");
    }
    if (scenario == "semiclassical-overlaps" || scenario == "wkb-vs-oracle") {
        const double m = cfg.value("m", 1.0), Om = cfg.value("Omega", 1.0);
        auto check = [&](double L) {
            if (std::sqrt(m * Om) * L < 5.0)
                warnings.push_back("semiclassical validity: sqrt(m Omega) L = " +
                                   fmt(std::sqrt(m * Om) * L) + " < 5");
        };
        if (cfg.contains("L")) check(cfg["L"].get<double>());
        if (cfg.contains("L_values"))
            for (double L : cfg["L_values"].get<std::vector<double>>()) check(L);
    }
    if (scenario == "qubit-evolve" || scenario == "qubit-ground") {
        const double omega = cfg.value("omega", 0.0), uu = cfg.value("uu", 0.0);
        if (omega < 0.0 || uu < 0.0) warnings.push_back("negative omega or uu");
    }
    return warnings;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gravcat scenario runner"};
    std::string config_path, out_dir = ".", format = "csv";
    int threads = 1;
    unsigned long long seed = 0;
    bool validate_only = false;
    app.add_option("--config", config_path, "JSON scenario config")->required();
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker threads for sweeps (output order fixed)");
    app.add_option("--seed", seed, "seed for stochastic probes");
    app.add_flag("--validate", validate_only, "dry-run validation report only");
    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot read config: " + config_path);
        json cfg = json::parse(in);

        if (validate_only) {
            const auto warnings = validate_config(cfg);
            if (warnings.empty())
                std::puts("ok: no warnings");
            else
                for (const auto& w : warnings) std::printf("warning: %s\n", w.c_str());
            return 0;
        }

        Config c(cfg, "");
        const std::string scenario = c.str("scenario");
        Output out;
        if (scenario == "qubit-evolve")
            out = run_qubit_evolve(c);
        else if (scenario == "qubit-ground")
            out = run_qubit_ground(c);
        else if (scenario == "semiclassical-overlaps")
            out = run_semiclassical_overlaps(c);
        else if (scenario == "wkb-vs-oracle")
            out = run_wkb_vs_oracle(c);
        else if (scenario == "ggp-solve")
            out = run_ggp_solve(c);
        else if (scenario == "twomode-evolve")
            out = run_twomode_evolve(c);
        else if (scenario == "rotor-simulate")
            out = run_rotor_simulate(c);
        else if (scenario == "rotor-spectrum")
            out = run_rotor_spectrum(c);
        else if (scenario == "rotor-lyapunov")
            out = run_rotor_lyapunov(c, static_cast<unsigned>(seed));
        else if (scenario == "aqt-compare")
            out = run_aqt_compare(c);
        else if (scenario == "sweep")
            out = run_sweep(c);
        else
            throw std::runtime_error("unknown scenario: " + scenario);

        std::filesystem::create_directories(out_dir);
        const std::string ext = format == "csv" ? ".csv" : ".json";
        const std::string path = (std::filesystem::path(out_dir) / (scenario + ext)).string();
        write_output(out, cfg, scenario, path, format);
        std::printf("wrote %s\n", path.c_str());
        return 0;
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = e.what();
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 1;
    }
}
