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

#include "wwpi/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wwpi/analysis.hpp"
#include "wwpi/errors.hpp"
#include "wwpi/path_engine.hpp"
#include "wwpi/random.hpp"
#include "wwpi/schmidt.hpp"

namespace wwpi {

namespace {

// Running maximum that remembers which trial produced it.
struct Worst {
    double value = 0.0;
    std::string where;

    void offer(double v, const std::string& context) {
        if (v > value || where.empty()) {
            if (v >= value) {
                value = v;
                where = context;
            }
        }
    }
};

std::string fmt_complex(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string fmt_state(const GeneralTwoQubit& s) {
    return "state a=" + fmt_complex(s.a()) + " b=" + fmt_complex(s.b()) + " c=" + fmt_complex(s.c()) +
           " d=" + fmt_complex(s.d());
}

std::string fmt_angles(const BlochAngles& m) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", m.theta(), m.phi());
    return buf;
}

GeneralTwoQubit random_two_qubit(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<Complex, 4> z;
    for (auto& v : z) {
        v = Complex{g(rng), g(rng)};
    }
    return GeneralTwoQubit::normalized(z[0], z[1], z[2], z[3]);
}

void add(VerifyResult& r, std::string name, const Worst& w, double limit, bool upper = true) {
    VerifyMetric m{std::move(name), w.value, limit, upper};
    if (!m.ok()) {
        r.offending.push_back(m.name + ": " + w.where);
    }
    r.metrics.push_back(std::move(m));
}

void verify_two_qubit(VerifyResult& r, Rng& rng) {
    Worst diff;
    Worst total;
    Worst histories;
    for (std::size_t t = 0; t < r.trials; ++t) {
        const TwoQubitScenario sc{random_schmidt_form(rng), random_bloch(rng), random_bloch(rng)};
        const ComparisonReport rep = compare_engines(sc);
        diff.offer(rep.max_abs_diff, rep.scenario);
        total.offer(std::abs(rep.path_raw_norm - 1.0), rep.scenario);
        const double count = static_cast<double>(enumerate_histories(build_two_qubit_circuit(sc.state, sc.m1, sc.m2)).size());
        histories.offer(std::abs(count - 8.0), rep.scenario);
    }
    add(r, "max_abs_diff", diff, tolerance());
    add(r, "raw_norm_deviation", total, tolerance());
    add(r, "history_count_deviation", histories, 0.0);
}

void verify_ghz(VerifyResult& r, Rng& rng) {
    Worst diff;
    Worst raw;
    Worst histories;
    for (std::size_t t = 0; t < r.trials; ++t) {
        const GhzScenario sc{random_bloch(rng), random_bloch(rng), random_bloch(rng)};
        const ComparisonReport rep = compare_engines(sc);
        diff.offer(rep.max_abs_diff, rep.scenario);
        raw.offer(std::abs(rep.path_raw_norm - 0.5), rep.scenario);
        const double count = static_cast<double>(enumerate_histories(build_ghz_circuit(sc.m1, sc.m2, sc.m3)).size());
        histories.offer(std::abs(count - 16.0), rep.scenario);
    }
    add(r, "max_abs_diff", diff, tolerance());
    add(r, "postselected_mass_deviation_from_half", raw, tolerance());
    add(r, "history_count_deviation", histories, 0.0);
}

void verify_schmidt(VerifyResult& r, Rng& rng) {
    Worst corner;
    Worst covariance;
    for (std::size_t t = 0; t < r.trials; ++t) {
        const GeneralTwoQubit s = random_two_qubit(rng);
        const BlochAngles g1 = random_bloch(rng);
        const BlochAngles g2 = random_bloch(rng);
        const SchmidtDecomposition dec = to_schmidt_form(s);
        const std::string where = fmt_state(s) + " m1=" + fmt_angles(g1) + " m2=" + fmt_angles(g2);
        corner.offer(std::max(dec.residual_00, dec.residual_11), where);
        const std::array<BlochAngles, 2> given{g1, g2};
        const OutcomeDistribution direct = product_basis_distribution(s.to_state(), given);
        const OutcomeDistribution schmidt = two_qubit_distribution(
            dec.form, rotate_measurement(g1, dec.first), rotate_measurement(g2, dec.second));
        double d = 0.0;
        for (std::size_t i = 0; i < direct.size(); ++i) {
            d = std::max(d, std::abs(direct.probability(i) - schmidt.probability(i)));
        }
        covariance.offer(d, where);
    }
    // Maximally entangled inputs, including the singlet.
    const double h = 1.0 / std::sqrt(2.0);
    const std::array<GeneralTwoQubit, 5> bells{
        GeneralTwoQubit(h, 0.0, 0.0, h), GeneralTwoQubit(h, 0.0, 0.0, -h), GeneralTwoQubit(0.0, h, h, 0.0),
        GeneralTwoQubit(0.0, h, -h, 0.0), GeneralTwoQubit(Complex{0.0, h}, 0.0, 0.0, Complex{h, 0.0})};
    Worst bell_corner;
    for (const auto& s : bells) {
        const SchmidtDecomposition dec = to_schmidt_form(s);
        bell_corner.offer(std::max(dec.residual_00, dec.residual_11), fmt_state(s));
    }
    add(r, "max_corner_residual", corner, kSchmidtTolerance);
    add(r, "max_frame_covariance_diff", covariance, kSchmidtTolerance);
    add(r, "max_entangled_corner_residual", bell_corner, kSchmidtTolerance);
}

void verify_nosignal(VerifyResult& r, Rng& rng) {
    constexpr std::size_t kFarSettings = 100;
    Worst path;
    Worst oracle;
    for (std::size_t t = 0; t < r.trials; ++t) {
        const SchmidtForm sf = random_schmidt_form(rng);
        const BlochAngles m1 = random_bloch(rng);
        std::vector<BlochAngles> far;
        for (std::size_t k = 0; k < kFarSettings; ++k) {
            far.push_back(random_bloch(rng));
        }
        const std::string where = describe(TwoQubitScenario{sf, m1, far.front()});
        path.offer(no_signalling_sweep(sf, m1, far, Engine::Path), where);
        oracle.offer(no_signalling_sweep(sf, m1, far, Engine::Oracle), where);
    }
    add(r, "path_marginal_variation", path, tolerance());
    add(r, "oracle_marginal_variation", oracle, tolerance());
}

void verify_chsh(VerifyResult& r, Rng& rng) {
    const double h = 1.0 / std::sqrt(2.0);
    const SchmidtForm bell(h, h, 0.0);
    const SchmidtForm product(1.0, 0.0, 0.0);
    const double tsirelson = 2.0 * std::sqrt(2.0);

    const ChshSearchResult found = chsh_search(bell, Engine::Path);
    Worst bell_max;
    Worst product_max;
    Worst engines;
    bell_max.offer(found.best_abs_s, "grid search");
    for (std::size_t t = 0; t < r.trials; ++t) {
        const ChshSettings s{random_bloch(rng), random_bloch(rng), random_bloch(rng), random_bloch(rng)};
        const std::string where = "a=" + fmt_angles(s.a) + " a'=" + fmt_angles(s.a_prime) + " b=" + fmt_angles(s.b) +
                                  " b'=" + fmt_angles(s.b_prime);
        const double sp = chsh(bell, s, Engine::Path);
        const double so = chsh(bell, s, Engine::Oracle);
        bell_max.offer(std::abs(sp), where);
        engines.offer(std::abs(sp - so), where);
        product_max.offer(std::abs(chsh(product, s, Engine::Path)), where);
    }
    Worst best;
    best.offer(bell_max.value, bell_max.where);
    add(r, "best_S_entangled", best, tsirelson - 1e-3, false);
    add(r, "max_S_entangled", bell_max, tsirelson + 1e-9);
    add(r, "max_S_product", product_max, 2.0 + 1e-9);
    add(r, "engine_S_diff", engines, tolerance());
}

}  // namespace

std::optional<VerifySuite> parse_suite(std::string_view name) {
    if (name == "two_qubit") return VerifySuite::TwoQubit;
    if (name == "ghz") return VerifySuite::Ghz;
    if (name == "schmidt") return VerifySuite::Schmidt;
    if (name == "nosignal") return VerifySuite::NoSignal;
    if (name == "chsh") return VerifySuite::Chsh;
    return std::nullopt;
}

const char* suite_name(VerifySuite suite) noexcept {
    switch (suite) {
        case VerifySuite::TwoQubit: return "two_qubit";
        case VerifySuite::Ghz: return "ghz";
        case VerifySuite::Schmidt: return "schmidt";
        case VerifySuite::NoSignal: return "nosignal";
        case VerifySuite::Chsh: return "chsh";
    }
    return "unknown";
}

bool VerifyResult::passed() const noexcept {
    return std::all_of(metrics.begin(), metrics.end(), [](const VerifyMetric& m) { return m.ok(); });
}

VerifyResult run_verify(VerifySuite suite, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw DomainError("verify needs at least one trial");
    }
    VerifyResult r{suite, trials, seed, {}, {}};
    Rng rng(seed);
    switch (suite) {
        case VerifySuite::TwoQubit: verify_two_qubit(r, rng); break;
        case VerifySuite::Ghz: verify_ghz(r, rng); break;
        case VerifySuite::Schmidt: verify_schmidt(r, rng); break;
        case VerifySuite::NoSignal: verify_nosignal(r, rng); break;
        case VerifySuite::Chsh: verify_chsh(r, rng); break;
    }
    return r;
}

std::string render(const VerifyResult& r) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "suite %s  trials %zu  seed %llu\n", suite_name(r.suite), r.trials,
                  static_cast<unsigned long long>(r.seed));
    out << line;
    for (const auto& m : r.metrics) {
        std::snprintf(line, sizeof line, "  %-40s %.6e  %s %.6e  %s\n", m.name.c_str(), m.value,
                      m.upper_bound ? "<=" : ">=", m.limit, m.ok() ? "ok" : "FAIL");
        out << line;
    }
    for (const auto& o : r.offending) {
        out << "  offending " << o << '\n';
    }
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace wwpi
