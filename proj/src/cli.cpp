// Copyright 2026 The privcap Authors
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

#include "privcap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "privcap/capacity.hpp"
#include "privcap/json_io.hpp"
#include "privcap/lemma_bench.hpp"
#include "privcap/report.hpp"

namespace privcap {

namespace {

constexpr std::size_t kScalarTrials = 100000;
constexpr std::size_t kMatrixTrials = 10000;

const char* const kCommands[] = {"twirl-check", "lemma2",      "lemma3",
                                 "avg-entropy", "coherent-info", "optimize",
                                 "degradability", "frame-potential", "report-all"};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string resolved_mode(const RunConfig& cfg) {
    if (cfg.mode) return *cfg.mode;
    return (cfg.d == 2 || cfg.d == 3) ? "exact-clifford" : "haar";
}

RngSeed experiment_seed(std::uint64_t seed, const char* name) { return {seed, stream_key(name)}; }

struct Runner {
    const RunConfig& cfg;
    std::uint64_t seed;
    std::string mode;
    BenchOptions opt;
    std::vector<ExperimentReport> reports;
    Json certificates = Json::array();

    // Module parameter errors are usage errors; anything else thrown while
    // computing becomes a failed report.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const UsageError&) {
            throw;
        } catch (const ParameterError& e) {
            throw UsageError(name + ": " + e.what());
        } catch (const DimensionError& e) {
            throw UsageError(name + ": " + e.what());
        } catch (const CapExceededError& e) {
            throw UsageError(name + ": " + e.what());
        } catch (const std::exception& e) {
            ExperimentReport r;
            r.name = name;
            r.params = {{"error", std::string(e.what())}};
            r.estimate = std::numeric_limits<double>::quiet_NaN();
            r.tol_sigma = opt.tol_sigma;
            r.tol_abs = opt.tol_abs.value_or(0.0);
            finalize(r);
            reports.push_back(std::move(r));
        }
    }

    UnitaryEnsemble ensemble(const std::string& m, std::size_t haar_default,
                             const char* stream) const {
        const RngSeed s = experiment_seed(seed, stream);
        if (m == "exact-clifford") {
            if (cfg.d != 2 && cfg.d != 3) {
                throw UsageError("exact-clifford mode needs d in {2, 3}; use --mode haar");
            }
            return clifford_group(cfg.d);
        }
        if (m == "haar") return haar_ensemble(cfg.d, cfg.trials.value_or(haar_default), s);
        const std::size_t count = cfg.trials.value_or(4);
        if (count < 1) throw UsageError("explicit mode needs at least one member");
        std::vector<UnitaryMatrix> us;
        for (std::size_t k = 0; k < count; ++k) us.push_back(haar_unitary(cfg.d, s.substream(k)));
        return UnitaryEnsemble::explicit_list(std::move(us));
    }

    VerifyMode sampling_mode(const char* command, std::size_t default_trials) const {
        if (mode == "explicit") {
            throw UsageError(std::string(command) + ": explicit mode is not available");
        }
        if (mode == "haar") return VerifyMode::haar(cfg.trials.value_or(default_trials));
        return VerifyMode::exact();
    }

    void twirl_check(bool report_all) {
        guarded("twirl-check", [&] {
            VerifyMode m = report_all ? ((cfg.d == 2 || cfg.d == 3) ? VerifyMode::exact()
                                                                     : VerifyMode::haar(kMatrixTrials))
                                      : sampling_mode("twirl-check", kMatrixTrials);
            if (m.kind == VerifyMode::Kind::Exact && cfg.d != 2 && cfg.d != 3) {
                throw UsageError("twirl-check: exact-clifford mode needs d in {2, 3}");
            }
            reports.push_back(verify_twirl(cfg.d, m, experiment_seed(seed, "twirl-check"), opt));
        });
    }

    void lemma2(bool report_all) {
        guarded("lemma2", [&] {
            const VerifyMode m =
                report_all ? VerifyMode::exact() : sampling_mode("lemma2", kScalarTrials);
            const RngSeed s = experiment_seed(seed, "lemma2");
            const std::size_t dn = ipow(cfg.d, cfg.n);
            check_dimension(dn * dn, "lemma2");
            HammingPattern pat{std::vector<std::size_t>(cfg.n, 1), std::vector<std::size_t>(cfg.n, 0)};
            const RngSeed shield_seed = s.substream(stream_key("shields"));
            std::pair<PureState, PureState> shields{haar_state(dn, shield_seed.substream(0)),
                                                    haar_state(dn, shield_seed.substream(1))};
            reports.push_back(verify_lemma2(cfg.d, cfg.n, pat, shields, m, s, opt));
        });
    }

    void lemma3(bool report_all) {
        guarded("lemma3", [&] {
            VerifyMode m = report_all ? VerifyMode::exact() : sampling_mode("lemma3", kScalarTrials);
            if (report_all && (cfg.n > 2 || cfg.d > 4)) m = VerifyMode::haar(kMatrixTrials);
            const RngSeed s = experiment_seed(seed, "lemma3");
            const std::size_t dn = ipow(cfg.d, cfg.n);
            check_dimension(dn * dn, "lemma3");
            auto engine = s.substream(stream_key("input")).engine();
            std::exponential_distribution<double> expo(1.0);
            std::vector<double> p(dn);
            double total = 0.0;
            for (auto& x : p) total += (x = expo(engine));
            for (auto& x : p) x /= total;
            std::vector<PureState> shields;
            const RngSeed shield_seed = s.substream(stream_key("shields"));
            for (std::size_t x = 0; x < dn; ++x) shields.push_back(haar_state(dn, shield_seed.substream(x)));
            reports.push_back(verify_lemma3_purity(cfg.d, cfg.n, p, shields, m, s, opt));
        });
    }

    void avg_entropy() {
        guarded("avg-entropy", [&] {
            reports.push_back(verify_avg_dephased_entropy(
                cfg.d, cfg.trials.value_or(kScalarTrials), experiment_seed(seed, "avg-entropy"), opt));
        });
    }

    void coherent_info(const std::string& m) {
        guarded("coherent-info", [&] {
            reports.push_back(verify_feasible_point(ensemble(m, kMatrixTrials, "coherent-info"), opt));
        });
    }

    void achievability(const std::string& m) {
        guarded("achievability", [&] {
            reports.push_back(verify_achievability(ensemble(m, 64, "achievability"), opt));
        });
    }

    void optimize(const std::string& m) {
        guarded("optimize", [&] {
            OptimizerOptions oo;
            oo.restarts = cfg.restarts;
            oo.n = cfg.n;
            std::optional<OptimizerResult> res;
            reports.push_back(verify_optimizer_ceiling(ensemble(m, 64, "optimize"),
                                                       experiment_seed(seed, "optimize"), oo, opt,
                                                       &res));
            certificates.push_back(to_json(*res));
        });
    }

    void degradability(const std::string& m) {
        if (cfg.d <= 3) {
            guarded("degradability", [&] {
                reports.push_back(verify_degradability(ensemble(m, 4, "degradability"), opt));
            });
        }
        guarded("degradability", [&] {
            reports.push_back(verify_degradability("identity", identity_pair(cfg.d), opt));
        });
    }

    void frame_potential(const std::string& m) {
        guarded("frame-potential", [&] {
            reports.push_back(verify_frame_potential(ensemble(m, 2000, "frame-potential"), opt));
        });
    }

    void report_all() {
        const std::string ens = (cfg.d == 2 || cfg.d == 3) ? "exact-clifford" : "haar";
        twirl_check(true);
        frame_potential(ens);
        lemma2(true);
        lemma3(true);
        avg_entropy();
        degradability("explicit");
        optimize(mode);
        achievability(mode);
        coherent_info(mode);
    }

    void dispatch() {
        const std::string& c = cfg.command;
        if (c == "twirl-check") twirl_check(false);
        else if (c == "lemma2") lemma2(false);
        else if (c == "lemma3") lemma3(false);
        else if (c == "avg-entropy") avg_entropy();
        else if (c == "coherent-info") coherent_info(mode);
        else if (c == "optimize") optimize(mode);
        else if (c == "degradability") degradability(mode);
        else if (c == "frame-potential") frame_potential(mode);
        else if (c == "report-all") report_all();
        else throw UsageError("unknown command: " + c);
    }
};

Json config_json(const RunConfig& cfg, const std::string& mode, std::uint64_t seed) {
    Json j;
    j["d"] = cfg.d;
    j["n"] = cfg.n;
    j["trials"] = cfg.trials ? Json(*cfg.trials) : Json(nullptr);
    j["restarts"] = cfg.restarts;
    j["mode"] = mode;
    j["seed"] = seed;
    j["format"] = cfg.format;
    j["threads"] = cfg.threads;
    j["tol_abs"] = cfg.tol_abs ? Json(*cfg.tol_abs) : Json(nullptr);
    j["tol_sigma"] = cfg.tol_sigma;
    return j;
}

std::optional<std::uint64_t> parse_seed(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool timing_enabled() {
    const char* t = std::getenv("PRIVCAP_TIMING");
    return t != nullptr && std::string(t) == "1";
}

}  // namespace

std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                              std::ostream& err) {
    CLI::App app{"Numerical checks for private and quantum capacity bounds", "privcap"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    std::optional<std::size_t> trials;
    std::optional<std::string> mode;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_path;
    std::optional<double> tol_abs;
    for (const char* name : kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--d", cfg.d, "Local dimension")->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
        sub->add_option("--n", cfg.n, "Number of channel uses")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
        sub->add_option("--trials", trials, "Monte Carlo trials or ensemble size")->check(CLI::PositiveNumber);
        sub->add_option("--restarts", cfg.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
        sub->add_option("--mode", mode, "exact-clifford, haar or explicit")
            ->check(CLI::IsMember({"exact-clifford", "haar", "explicit"}));
        sub->add_option("--seed", seed, "Seed (falls back to PRIVCAP_SEED)");
        sub->add_option("--out", out_path, "Output file (default stdout)");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--tol-abs", tol_abs, "Absolute slack override")->check(CLI::NonNegativeNumber);
        sub->add_option("--tol-sigma", cfg.tol_sigma, "Standard errors of slack")->check(CLI::NonNegativeNumber);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "privcap: " << e.what() << "\n";
        return 2;
    }
    for (const CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
    cfg.trials = trials;
    cfg.mode = mode;
    cfg.seed = seed;
    cfg.out = out_path;
    cfg.tol_abs = tol_abs;
    if (!cfg.seed) {
        if (const char* env = std::getenv("PRIVCAP_SEED")) {
            cfg.seed = parse_seed(env);
            if (!cfg.seed) {
                err << "privcap: PRIVCAP_SEED is not a non-negative integer\n";
                return 2;
            }
        }
    }
    if (!cfg.seed) {
        err << "privcap: a seed is required (--seed or PRIVCAP_SEED)\n";
        return 2;
    }
    return std::nullopt;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.seed) {
        err << "privcap: a seed is required (--seed or PRIVCAP_SEED)\n";
        return 2;
    }
    Runner runner{cfg, *cfg.seed, resolved_mode(cfg), {}, {}, Json::array()};
    runner.opt.exec.threads = cfg.threads;
    runner.opt.tol_sigma = cfg.tol_sigma;
    runner.opt.tol_abs = cfg.tol_abs;
    try {
        runner.dispatch();
    } catch (const UsageError& e) {
        err << "privcap: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "privcap: " << cfg.command << ": " << e.what() << "\n";
        return 2;
    }

    const bool timing = timing_enabled();
    for (auto& r : runner.reports) {
        if (timing) err << r.name << ": " << r.wall_ms << " ms\n";
        else r.wall_ms = 0;
    }

    const Json config = config_json(cfg, runner.mode, *cfg.seed);
    std::string body;
    if (cfg.format == "csv") {
        body = "# privcap_version=" + std::string(kVersion) + " command=" + cfg.command +
               " config=" + config.dump() + "\n" + reports_to_csv(runner.reports);
    } else {
        std::string reports = reports_to_json(runner.reports);
        reports.pop_back();
        body = "{\"privcap_version\":" + Json(kVersion).dump() +
               ",\"command\":" + Json(cfg.command).dump() + ",\"config\":" + config.dump() +
               ",\n\"reports\":" + reports;
        if (!runner.certificates.empty()) {
            body += ",\n\"certificates\":" + runner.certificates.dump();
        }
        body += "}\n";
    }

    if (cfg.out) {
        std::ofstream f(*cfg.out, std::ios::binary | std::ios::trunc);
        if (!f) {
            err << "privcap: cannot open " << *cfg.out << " for writing\n";
            return 2;
        }
        f << body;
        f.flush();
        if (!f) {
            err << "privcap: write to " << *cfg.out << " failed\n";
            return 2;
        }
    } else {
        out << body;
        out.flush();
    }

    for (const auto& r : runner.reports) {
        if (!r.pass) return 1;
    }
    return 0;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (auto code = parse_args(argc, argv, cfg, out, err)) return *code;
    return run(cfg, out, err);
}

}  // namespace privcap
