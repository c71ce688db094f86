// Copyright 2026 The wwpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wwpi/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wwpi/analysis.hpp"
#include "wwpi/config.hpp"
#include "wwpi/errors.hpp"
#include "wwpi/path_engine.hpp"
#include "wwpi/schmidt.hpp"
#include "wwpi/verify.hpp"

namespace wwpi {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kInputNormTolerance = 1e-9;

class ToleranceGuard {
  public:
    ToleranceGuard() : saved_(tolerance()) {}
    ~ToleranceGuard() { set_tolerance(saved_); }
    ToleranceGuard(const ToleranceGuard&) = delete;
    ToleranceGuard& operator=(const ToleranceGuard&) = delete;

  private:
    double saved_;
};

void apply_env_tolerance() {
    const char* raw = std::getenv("WWPI_TOL");
    if (raw == nullptr || *raw == '\0') {
        return;
    }
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
        throw ConfigError(std::string("WWPI_TOL: expected a positive number, got '") + raw + "'");
    }
    set_tolerance(tol);
}

std::string fixed12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

// "re,im" or "re".
Complex parse_complex(const std::string& flag, const std::string& s) {
    const auto comma = s.find(',');
    auto real = [&](const std::string& part) {
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (part.empty() || end != part.c_str() + part.size() || !std::isfinite(v)) {
            throw ConfigError(flag + ": expected 're,im', got '" + s + "'");
        }
        return v;
    };
    if (comma == std::string::npos) {
        return {real(s), 0.0};
    }
    return {real(s.substr(0, comma)), real(s.substr(comma + 1))};
}

struct Simulation {
    std::string scenario;
    std::size_t num_qubits = 0;
    std::optional<OutcomeDistribution> path;
    std::optional<OutcomeDistribution> oracle;
    std::optional<Circuit> circuit;
};

std::string angles_text(const std::vector<BlochAngles>& settings) {
    std::string s;
    for (std::size_t i = 0; i < settings.size(); ++i) {
        char buf[96];
        std::snprintf(buf, sizeof buf, " m%zu=(%.17g, %.17g)", i + 1, settings[i].theta(), settings[i].phi());
        s += buf;
    }
    return s;
}

Simulation simulate(const ScenarioConfig& cfg) {
    Simulation sim;
    const bool want_path = cfg.engine != EngineChoice::Oracle;
    const bool want_oracle = cfg.engine != EngineChoice::Path;
    switch (cfg.kind) {
        case ScenarioKind::SingleQubit: {
            char buf[160];
            std::snprintf(buf, sizeof buf, "single_qubit a=%.17g%+.17gi b=%.17g%+.17gi", cfg.a.real(), cfg.a.imag(),
                          cfg.b.real(), cfg.b.imag());
            sim.scenario = buf + angles_text(cfg.settings);
            sim.circuit = build_single_qubit_circuit(cfg.a, cfg.b, cfg.settings[0]);
            if (want_oracle) {
                sim.oracle = product_basis_distribution(StateVector(std::vector<Complex>{cfg.a, cfg.b}), cfg.settings);
            }
            break;
        }
        case ScenarioKind::TwoQubit: {
            const TwoQubitScenario sc{*cfg.schmidt, cfg.settings[0], cfg.settings[1]};
            sim.scenario = describe(sc);
            sim.circuit = build_two_qubit_circuit(sc.state, sc.m1, sc.m2);
            if (want_oracle) {
                sim.oracle = run_engine(sc, Engine::Oracle);
            }
            break;
        }
        case ScenarioKind::Ghz: {
            const GhzScenario sc{cfg.settings[0], cfg.settings[1], cfg.settings[2]};
            sim.scenario = describe(sc);
            sim.circuit = build_ghz_circuit(sc.m1, sc.m2, sc.m3);
            if (want_oracle) {
                sim.oracle = run_engine(sc, Engine::Oracle);
            }
            break;
        }
        case ScenarioKind::CustomCircuit:
            sim.circuit = *cfg.circuit;
            sim.scenario = "custom_circuit";
            break;
    }
    if (want_path) {
        sim.path = outcome_distribution(*sim.circuit);
    }
    sim.num_qubits = sim.path ? sim.path->num_qubits() : sim.oracle->num_qubits();
    return sim;
}

ComparisonReport comparison(const Simulation& sim) {
    ComparisonReport report;
    report.scenario = sim.scenario;
    report.path_raw_norm = sim.path->raw_norm();
    for (std::size_t i = 0; i < sim.path->size(); ++i) {
        const double p = sim.path->probability(i);
        const double o = sim.oracle->probability(i);
        report.rows.push_back({sim.path->key(i).to_string(), p, o, std::abs(p - o)});
        report.max_abs_diff = std::max(report.max_abs_diff, std::abs(p - o));
    }
    return report;
}

std::string route_text(const Circuit& c, const History& h, const PhotonPath& p) {
    std::string s = c.sources[p.source].branches[h.branch_choice[p.source]].paths[p.emission] + ":";
    for (const auto& step : p.steps) {
        s += step.route == Route::Reflect ? 'R' : 'T';
    }
    return s + "->" + c.detectors[p.detector].id;
}

void print_histories(const Circuit& c, std::ostream& out) {
    const auto histories = enumerate_histories(c);
    out << "histories " << histories.size() << '\n';
    for (std::size_t i = 0; i < histories.size(); ++i) {
        const History& h = histories[i];
        std::string branches;
        for (std::size_t b : h.branch_choice) {
            branches += (branches.empty() ? "" : ",") + std::to_string(b);
        }
        std::string photons;
        for (const auto& p : h.photons) {
            photons += (photons.empty() ? "" : " ") + route_text(c, h, p);
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "%+.12f %+.12fi", h.amplitude.real(), h.amplitude.imag());
        out << "  " << i << "  branch " << branches << "  " << photons << "  "
            << history_outcome(c, h).to_string() << "  " << buf << '\n';
    }
}

void print_single(const Simulation& sim, const OutcomeDistribution& d, const char* engine, OutputFormat fmt,
                  std::ostream& out) {
    if (fmt == OutputFormat::Csv) {
        out << "outcome,probability\n";
        for (std::size_t i = 0; i < d.size(); ++i) {
            out << d.key(i).to_string() << ',' << fixed12(d.probability(i)) << '\n';
        }
        return;
    }
    out << "# " << sim.scenario << '\n';
    out << "# engine " << engine << '\n';
    for (std::size_t i = 0; i < d.size(); ++i) {
        out << d.key(i).to_string() << "  " << fixed12(d.probability(i)) << '\n';
    }
    out << "sum  " << fixed12(d.total()) << '\n';
    out << "raw_norm  " << fixed12(d.raw_norm()) << '\n';
}

Json distribution_json(const OutcomeDistribution& d) {
    Json probs = Json::object();
    for (std::size_t i = 0; i < d.size(); ++i) {
        probs[d.key(i).to_string()] = d.probability(i);
    }
    return probs;
}

int render_simulation(const ScenarioConfig& cfg, const Simulation& sim, bool verbose, std::ostream& out) {
    int code = kExitOk;
    if (cfg.output == OutputFormat::Json) {
        Json j;
        j["scenario"] = sim.scenario;
        j["kind"] = kind_name(cfg.kind);
        j["num_qubits"] = sim.num_qubits;
        if (sim.path) {
            j["path"] = {{"raw_norm", sim.path->raw_norm()}, {"probabilities", distribution_json(*sim.path)}};
        }
        if (sim.oracle) {
            j["oracle"] = {{"probabilities", distribution_json(*sim.oracle)}};
        }
        if (sim.path && sim.oracle) {
            const ComparisonReport rep = comparison(sim);
            j["max_abs_diff"] = rep.max_abs_diff;
            code = rep.max_abs_diff <= tolerance() ? kExitOk : kExitTolerance;
        }
        if (verbose && sim.path) {
            Json hs = Json::array();
            for (const History& h : enumerate_histories(*sim.circuit)) {
                Json routes = Json::array();
                for (const auto& p : h.photons) {
                    routes.push_back(route_text(*sim.circuit, h, p));
                }
                hs.push_back({{"branches", h.branch_choice},
                              {"photons", routes},
                              {"outcome", history_outcome(*sim.circuit, h).to_string()},
                              {"amplitude", {{"re", h.amplitude.real()}, {"im", h.amplitude.imag()}}}});
            }
            j["histories"] = hs;
        }
        out << j.dump(2) << '\n';
        return code;
    }

    if (sim.path && sim.oracle) {
        const ComparisonReport rep = comparison(sim);
        out << (cfg.output == OutputFormat::Csv ? render_csv(rep) : render_table(rep));
        if (cfg.output == OutputFormat::Table) {
            out << "raw_norm  " << fixed12(rep.path_raw_norm) << '\n';
        }
        code = rep.max_abs_diff <= tolerance() ? kExitOk : kExitTolerance;
    } else if (sim.path) {
        print_single(sim, *sim.path, "path", cfg.output, out);
    } else {
        print_single(sim, *sim.oracle, "oracle", cfg.output, out);
    }
    if (verbose && sim.path && cfg.output == OutputFormat::Table) {
        print_histories(*sim.circuit, out);
    }
    return code;
}

struct SimulateOptions {
    std::string config;
    std::string engine;
    std::string output;
    bool verbose = false;
};

int cmd_simulate(const SimulateOptions& opt, bool force_both, std::ostream& out) {
    ScenarioConfig cfg = load_config(opt.config);
    if (!opt.engine.empty()) {
        cfg.engine = parse_engine_choice(opt.engine);
    }
    if (force_both) {
        cfg.engine = EngineChoice::Both;
    }
    if (cfg.kind == ScenarioKind::CustomCircuit && cfg.engine != EngineChoice::Path) {
        throw ConfigError("engine: custom_circuit scenarios have no oracle; use engine path");
    }
    if (!opt.output.empty()) {
        cfg.output = parse_output_format(opt.output);
    }
    const Simulation sim = simulate(cfg);
    return render_simulation(cfg, sim, opt.verbose, out);
}

struct SchmidtOptions {
    std::string a = "0";
    std::string b = "0";
    std::string c = "0";
    std::string d = "0";
};

std::string angle_pair(const char* label, const BasisRotation& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s  alpha %.12f  beta %.12f\n", label, r.alpha(), r.beta());
    return buf;
}

std::string complex12(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12f %+.12fi", z.real(), z.imag());
    return buf;
}

int cmd_schmidt(const SchmidtOptions& opt, std::ostream& out, std::ostream& err) {
    const Complex a = parse_complex("--a", opt.a);
    const Complex b = parse_complex("--b", opt.b);
    const Complex c = parse_complex("--c", opt.c);
    const Complex d = parse_complex("--d", opt.d);
    const double n = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kInputNormTolerance) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "state is not normalized: |a|^2+|b|^2+|c|^2+|d|^2 = %.17g\n", n);
        err << buf;
        return kExitConfig;
    }
    const GeneralTwoQubit state = GeneralTwoQubit::normalized(a, b, c, d);
    const SchmidtDecomposition dec = to_schmidt_form(state);
    out << "A  " << fixed12(dec.form.A()) << '\n';
    out << "B  " << fixed12(dec.form.B()) << '\n';
    out << "delta  " << fixed12(dec.form.delta()) << '\n';
    out << "concurrence  " << fixed12(concurrence_like(state)) << '\n';
    if (dec.maximally_entangled) {
        out << "branch maximally_entangled\n";
        out << "gamma  " << fixed12(dec.params->gamma) << '\n';
        out << "chi1  " << fixed12(dec.params->chi1) << '\n';
        out << "chi2  " << fixed12(dec.params->chi2) << '\n';
        out << "f  " << complex12(dec.pair->f) << '\n';
        out << "g  " << complex12(dec.pair->g) << '\n';
    } else {
        out << "branch general\n";
    }
    out << angle_pair("qubit1", dec.first);
    out << angle_pair("qubit2", dec.second);
    out << "residual_00  " << fixed12(dec.residual_00) << '\n';
    out << "residual_11  " << fixed12(dec.residual_11) << '\n';
    return std::max(dec.residual_00, dec.residual_11) <= kSchmidtTolerance ? kExitOk : kExitTolerance;
}

struct VerifyOptions {
    std::string suite;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const auto suite = parse_suite(opt.suite);
    if (!suite) {
        throw ConfigError("verify: unknown suite '" + opt.suite + "' (two_qubit, ghz, schmidt, nosignal, chsh)");
    }
    if (opt.trials == 0) {
        throw ConfigError("--trials: must be at least 1");
    }
    const VerifyResult r = run_verify(*suite, opt.trials, opt.seed);
    out << render(r);
    return r.passed() ? kExitOk : kExitTolerance;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Which-way path-integral simulator for photonic qubit circuits", "wwpi"};
    app.require_subcommand(1);

    SimulateOptions sim_opt;
    auto add_sim_flags = [&](CLI::App* sub, bool engine_flag) {
        sub->add_option("--config", sim_opt.config, "Scenario config (JSON)")->required();
        if (engine_flag) {
            sub->add_option("--engine", sim_opt.engine, "path, oracle or both");
        }
        sub->add_option("--output", sim_opt.output, "table, csv or json");
        sub->add_flag("--verbose", sim_opt.verbose, "Also print the per-history amplitude table");
    };
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Compute outcome probabilities for a scenario");
    add_sim_flags(simulate_cmd, true);
    CLI::App* compare_cmd = app.add_subcommand("compare", "Run both engines and compare");
    add_sim_flags(compare_cmd, false);

    SchmidtOptions sch_opt;
    CLI::App* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a two-qubit state");
    schmidt_cmd->add_option("--a", sch_opt.a, "Coefficient of |00> as re,im");
    schmidt_cmd->add_option("--b", sch_opt.b, "Coefficient of |01> as re,im");
    schmidt_cmd->add_option("--c", sch_opt.c, "Coefficient of |10> as re,im");
    schmidt_cmd->add_option("--d", sch_opt.d, "Coefficient of |11> as re,im");

    VerifyOptions ver_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a randomized property suite");
    verify_cmd->add_option("suite", ver_opt.suite, "two_qubit, ghz, schmidt, nosignal or chsh")->required();
    verify_cmd->add_option("--trials", ver_opt.trials, "Number of random trials");
    verify_cmd->add_option("--seed", ver_opt.seed, "RNG seed");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("wwpi");
    }
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    ToleranceGuard guard;
    try {
        apply_env_tolerance();
        if (simulate_cmd->parsed()) {
            return cmd_simulate(sim_opt, false, out);
        }
        if (compare_cmd->parsed()) {
            return cmd_simulate(sim_opt, true, out);
        }
        if (schmidt_cmd->parsed()) {
            return cmd_schmidt(sch_opt, out, err);
        }
        return cmd_verify(ver_opt, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "engine error: " << e.what() << '\n';
        return kExitEngine;
    }
}

}  // namespace wwpi
