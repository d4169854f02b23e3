// Copyright 2026 The qgp Authors
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

#include "qgp/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgp/baselines/exact.hpp"
#include "qgp/baselines/trace_estimation.hpp"
#include "qgp/cli/config.hpp"
#include "qgp/errors.hpp"
#include "qgp/kernels/covariance.hpp"
#include "qgp/numerics/decomposition.hpp"
#include "qgp/numerics/matrix_io.hpp"
#include "qgp/text.hpp"
#include "qgp/trainer/study.hpp"
#include "qgp/trainer/training.hpp"

namespace qgp::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct KernelOptions {
    std::string kind = "rbf";
    kernels::Hyperparameters params;

    kernels::KernelSpec spec() const {
        kernels::KernelSpec s{kernels::parse_kernel_kind(kind), params};
        s.params.validate();
        return s;
    }
};

void add_kernel_options(CLI::App *app, KernelOptions &k) {
    app->add_option("--kernel", k.kind, "Covariance kernel")
        ->check(CLI::IsMember({"rbf", "compact"}))
        ->capture_default_str();
    app->add_option("--lengthscale", k.params.lengthscale)->capture_default_str();
    app->add_option("--signal-variance", k.params.signal_variance)->capture_default_str();
    app->add_option("--noise-variance", k.params.noise_variance)->capture_default_str();
    app->add_option("--support-radius", k.params.support_radius, "Compact kernel radius")
        ->capture_default_str();
}

struct QuantumOptions {
    std::size_t register_size = 1024;
    std::string t0_policy = "max-resolution";
    std::optional<double> t0;
    std::optional<double> spectral_bound;
    std::optional<double> rotation_constant;
    std::string clamp = "half-bin";
    std::uint64_t samples_det = 10000;
    std::uint64_t samples_fit = 10000;
    unsigned threads = 0;

    estimators::QuantumSettings settings() const {
        estimators::QuantumSettings s;
        s.register_size = register_size;
        if (t0_policy == "fixed") {
            if (!t0) {
                throw ConfigError("--t0-policy fixed needs --t0");
            }
            s.evolution_time = t0;
        } else if (t0) {
            throw ConfigError("--t0 is only used with --t0-policy fixed");
        }
        s.spectral_bound = spectral_bound;
        s.rotation_constant = rotation_constant;
        s.clamp_policy = qsim::parse_clamp_policy(clamp);
        s.samples_det = samples_det;
        s.samples_fit = samples_fit;
        s.options.threads = threads;
        return s;
    }
};

void add_quantum_options(CLI::App *app, QuantumOptions &q) {
    app->add_option("--T", q.register_size, "Phase-estimation register size (power of two)")
        ->capture_default_str();
    app->add_option("--t0-policy", q.t0_policy, "Evolution time rule")
        ->check(CLI::IsMember({"max-resolution", "fixed"}))
        ->capture_default_str();
    app->add_option("--t0", q.t0, "Evolution time for --t0-policy fixed");
    app->add_option("--spectral-bound", q.spectral_bound,
                    "Upper bound on the spectrum (default: Gershgorin/Frobenius bound)");
    app->add_option("--rotation-constant", q.rotation_constant,
                    "Ancilla rotation constant C (default: derived from noise and t0)");
    app->add_option("--clamp", q.clamp, "Zero-bin policy")
        ->check(CLI::IsMember({"half-bin", "resample"}))
        ->capture_default_str();
    app->add_option("--samples-det", q.samples_det, "Log-determinant samples")
        ->capture_default_str();
    app->add_option("--samples-fit", q.samples_fit, "Data-fit samples")->capture_default_str();
    app->add_option("--threads", q.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write " + path);
    }
    file << text;
    if (!file) {
        throw ConfigError("failed writing " + path);
    }
}

std::string cmd_gen_data(std::size_t n, std::size_t d, const std::string &layout, double extent,
                         double spacing, const kernels::KernelSpec &spec, std::uint64_t seed) {
    if (n < 1 || d < 1) {
        throw ConfigError("--n and --d must be >= 1");
    }
    Rng rng(seed);
    numerics::Matrix inputs;
    if (layout == "grid") {
        if (d != 1) {
            throw ConfigError("grid inputs are one-dimensional; use --d 1");
        }
        inputs = kernels::grid_inputs(n, spacing);
    } else {
        inputs = kernels::uniform_inputs(n, d, extent, rng);
    }
    const auto data = kernels::sample_gp_dataset(std::move(inputs), spec, rng);
    std::ostringstream os;
    kernels::write_dataset_csv(os, data);
    return os.str();
}

nlohmann::ordered_json oracle_line(const std::string &estimator, double estimate, double oracle) {
    nlohmann::ordered_json j;
    j["oracle"] = estimator;
    j["value"] = oracle;
    j["error"] = estimate - oracle;
    return j;
}

std::string cmd_estimate(const std::string &kind, const std::string &data_path,
                         const std::string &matrix_path, const kernels::KernelSpec &spec,
                         const estimators::QuantumSettings &settings, bool with_oracle,
                         std::uint64_t seed) {
    if (data_path.empty() == matrix_path.empty()) {
        throw ConfigError("estimate needs exactly one of --data or --matrix");
    }
    std::optional<numerics::SymmetricMatrix> a;
    numerics::Vector y;
    if (!matrix_path.empty()) {
        if (kind != "logdet") {
            throw ConfigError("--matrix supplies no observations; only 'estimate logdet' accepts it");
        }
        a = numerics::load_symmetric_matrix(matrix_path);
        y = numerics::Vector::Zero(static_cast<Eigen::Index>(a->size()));
    } else {
        const auto data = kernels::load_dataset(data_path);
        a = kernels::regularized_covariance(data, spec);
        y = data.outputs();
    }

    const estimators::QuantumInstance instance(*a, y, spec.params.noise_variance, settings);
    estimators::EstimateReport report;
    double oracle = 0.0;
    if (kind == "logdet") {
        report = instance.logdet(seed);
        oracle = with_oracle ? numerics::cholesky_logdet(*a) : 0.0;
    } else if (kind == "datafit") {
        report = instance.datafit(seed);
        oracle = with_oracle ? baselines::exact_datafit(*a, y) : 0.0;
    } else {
        report = instance.lml(seed);
        oracle = with_oracle ? baselines::exact_lml(*a, y) : 0.0;
    }
    std::string text = estimators::to_json_line(report) + '\n';
    if (with_oracle) {
        text += oracle_line(kind, report.mean, oracle).dump() + '\n';
    }
    return text;
}

std::vector<trainer::GridAxis> collect_grid(const std::map<trainer::Parameter, std::string> &lists) {
    std::vector<trainer::GridAxis> grid;
    for (const auto &[param, text] : lists) {
        if (!text.empty()) {
            grid.push_back({param, parse_real_list(text)});
        }
    }
    if (grid.empty()) {
        throw ConfigError("train needs at least one --grid-* list");
    }
    return grid;
}

} // namespace

std::vector<ComparisonRow> compare_methods(const kernels::Dataset &data,
                                           const ComparisonConfig &cfg, std::uint64_t seed) {
    const auto a = kernels::regularized_covariance(data, cfg.spec);
    const auto &y = data.outputs();
    const std::size_t n = data.size();
    const double oracle = baselines::exact_lml(a, y);
    const double datafit = baselines::exact_datafit(a, y);
    const double norm_const = 0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
    const std::uint64_t budget = cfg.quantum.samples_det;

    auto timed = [&](auto &&fn, ComparisonRow &row) {
        const auto start = Clock::now();
        fn();
        if (cfg.timing) {
            row.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
        }
    };

    std::vector<ComparisonRow> rows;
    ComparisonRow exact{"exact", n, 0, oracle, 0.0, 0.0, -1.0};
    timed([&] { exact.estimate = baselines::exact_lml(a, y); }, exact);
    rows.push_back(exact);

    ComparisonRow quantum{"quantum", n, budget, 0.0, 0.0, 0.0, -1.0};
    timed(
        [&] {
            const estimators::QuantumInstance instance(a, y, cfg.spec.params.noise_variance,
                                                       cfg.quantum);
            const auto r = instance.lml(seed);
            quantum.estimate = r.mean;
            quantum.standard_error = r.standard_error;
        },
        quantum);
    quantum.error_vs_oracle = quantum.estimate - oracle;
    rows.push_back(quantum);

    auto classical = [&](baselines::TraceMethod method, int degree) {
        baselines::TraceEstimatorConfig tc;
        tc.method = method;
        tc.degree = degree;
        tc.probe_count = budget;
        if (method == baselines::TraceMethod::Chebyshev) {
            tc.lower = cfg.spec.params.noise_variance;
            tc.upper = numerics::spectral_upper_bound(a);
        }
        ComparisonRow row{std::string(baselines::trace_method_name(method)), n, budget,
                          0.0, 0.0, 0.0, -1.0};
        timed(
            [&] {
                const auto r = baselines::hutchinson_trace_log(a, tc, seed, cfg.quantum.options);
                row.estimate = -0.5 * r.mean - 0.5 * datafit - norm_const;
                row.standard_error = 0.5 * r.standard_error;
            },
            row);
        row.error_vs_oracle = row.estimate - oracle;
        rows.push_back(row);
    };
    classical(baselines::TraceMethod::TaylorTruncated, cfg.taylor_degree);
    classical(baselines::TraceMethod::Chebyshev, cfg.chebyshev_degree);
    return rows;
}

void write_comparison_csv(std::ostream &out, const std::vector<ComparisonRow> &rows) {
    out << "method,n,budget,estimate,stderr,error_vs_oracle,wall_time\n";
    for (const auto &r : rows) {
        out << r.method << ',' << r.n << ',' << r.budget << ',' << format_real(r.estimate) << ','
            << format_real(r.standard_error) << ',' << format_real(r.error_vs_oracle) << ',';
        if (r.wall_time >= 0.0) {
            out << format_real(r.wall_time);
        }
        out << '\n';
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gaussian-process training with simulated quantum estimators", "qgp"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_path;
    std::string config_path;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", seed, "Random seed (required)")->required();
        sub->add_option("--out", out_path, "Output file (default: stdout)");
        sub->add_option("--config", config_path, "key=value file; flags override it");
    };

    // gen-data
    auto *gen = app.add_subcommand("gen-data", "Draw a synthetic GP dataset as CSV");
    KernelOptions gen_kernel;
    std::size_t gen_n = 0;
    std::size_t gen_d = 1;
    std::string gen_layout = "uniform";
    double gen_extent = 4.0;
    double gen_spacing = 0.25;
    common(gen);
    add_kernel_options(gen, gen_kernel);
    gen->add_option("--n", gen_n, "Number of observations")->required();
    gen->add_option("--d", gen_d, "Input dimension")->capture_default_str();
    gen->add_option("--inputs", gen_layout, "Input layout")
        ->check(CLI::IsMember({"uniform", "grid"}))
        ->capture_default_str();
    gen->add_option("--extent", gen_extent, "Side of the uniform input cube")
        ->capture_default_str();
    gen->add_option("--spacing", gen_spacing, "Grid spacing")->capture_default_str();

    // estimate
    auto *est = app.add_subcommand("estimate", "Quantum estimate of logdet, datafit or lml");
    std::string est_kind;
    std::string est_data;
    std::string est_matrix;
    bool est_oracle = false;
    KernelOptions est_kernel;
    QuantumOptions est_quantum;
    common(est);
    est->add_option("kind", est_kind, "logdet | datafit | lml")
        ->required()
        ->check(CLI::IsMember({"logdet", "datafit", "lml"}));
    est->add_option("--data", est_data, "Dataset CSV");
    est->add_option("--matrix", est_matrix, "Matrix text file (logdet only)");
    est->add_flag("--with-oracle", est_oracle, "Also print the exact value");
    add_kernel_options(est, est_kernel);
    add_quantum_options(est, est_quantum);

    // compare
    auto *cmp = app.add_subcommand("compare", "Quantum versus Taylor and Chebyshev baselines");
    std::string cmp_data;
    bool cmp_timing = false;
    ComparisonConfig cmp_cfg;
    KernelOptions cmp_kernel;
    QuantumOptions cmp_quantum;
    common(cmp);
    cmp->add_option("--data", cmp_data, "Dataset CSV")->required();
    cmp->add_option("--taylor-degree", cmp_cfg.taylor_degree)->capture_default_str();
    cmp->add_option("--chebyshev-degree", cmp_cfg.chebyshev_degree)->capture_default_str();
    cmp->add_flag("--timing", cmp_timing, "Fill the wall_time column (not reproducible)");
    add_kernel_options(cmp, cmp_kernel);
    add_quantum_options(cmp, cmp_quantum);

    // train
    auto *trn = app.add_subcommand("train", "Coordinate ascent over a hyperparameter grid");
    std::string trn_data;
    std::map<trainer::Parameter, std::string> trn_lists;
    std::string trn_evaluator = "quantum";
    trainer::TrainerConfig trn_cfg;
    KernelOptions trn_kernel;
    QuantumOptions trn_quantum;
    common(trn);
    trn->add_option("--data", trn_data, "Dataset CSV")->required();
    for (auto p : {trainer::Parameter::Lengthscale, trainer::Parameter::SignalVariance,
                   trainer::Parameter::NoiseVariance, trainer::Parameter::SupportRadius}) {
        std::string flag = "--grid-" + std::string(trainer::parameter_name(p));
        std::replace(flag.begin(), flag.end(), '_', '-');
        trn->add_option(flag, trn_lists[p], "Comma-separated values");
    }
    trn->add_option("--evaluator", trn_evaluator, "LML evaluator")
        ->check(CLI::IsMember({"quantum", "exact"}))
        ->capture_default_str();
    trn->add_option("--max-steps", trn_cfg.max_steps, "Coordinate passes")->capture_default_str();
    trn->add_option("--threshold", trn_cfg.acceptance_threshold,
                    "Acceptance margin in combined standard errors")
        ->capture_default_str();
    add_kernel_options(trn, trn_kernel);
    add_quantum_options(trn, trn_quantum);

    // study
    auto *std_cmd = app.add_subcommand("study", "Relative variance of dLML versus n");
    trainer::StudyConfig study_cfg;
    std::string study_sizes = "16,64,256";
    std::string study_evaluator = "quantum";
    KernelOptions study_kernel;
    QuantumOptions study_quantum;
    study_quantum.register_size = 64;
    common(std_cmd);
    std_cmd->add_option("--sizes", study_sizes, "Comma-separated n values")->capture_default_str();
    std_cmd->add_option("--repetitions", study_cfg.repetitions)->capture_default_str();
    std_cmd->add_option("--spacing", study_cfg.grid_spacing, "Input grid spacing")
        ->capture_default_str();
    std_cmd->add_option("--misspecification", study_cfg.misspecification,
                        "Evaluated / generating value of the perturbed parameter")
        ->capture_default_str();
    std_cmd->add_option("--perturbation", study_cfg.perturbation, "Relative parameter step")
        ->capture_default_str();
    std_cmd->add_option("--confidence", study_cfg.confidence)->capture_default_str();
    std_cmd->add_option("--evaluator", study_evaluator, "LML evaluator")
        ->check(CLI::IsMember({"quantum", "exact"}))
        ->capture_default_str();
    add_kernel_options(std_cmd, study_kernel);
    add_quantum_options(std_cmd, study_quantum);

    try {
        auto expanded = expand_config(args);
        std::reverse(expanded.begin(), expanded.end());
        try {
            app.parse(expanded);
        } catch (const CLI::ParseError &e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : kExitUsage;
        }

        std::string text;
        if (gen->parsed()) {
            text = cmd_gen_data(gen_n, gen_d, gen_layout, gen_extent, gen_spacing,
                                gen_kernel.spec(), seed);
        } else if (est->parsed()) {
            text = cmd_estimate(est_kind, est_data, est_matrix, est_kernel.spec(),
                                est_quantum.settings(), est_oracle, seed);
        } else if (cmp->parsed()) {
            cmp_cfg.spec = cmp_kernel.spec();
            cmp_cfg.quantum = cmp_quantum.settings();
            cmp_cfg.timing = cmp_timing;
            std::ostringstream os;
            write_comparison_csv(os, compare_methods(kernels::load_dataset(cmp_data), cmp_cfg, seed));
            text = os.str();
        } else if (trn->parsed()) {
            trn_cfg.base = trn_kernel.spec();
            trn_cfg.grid = collect_grid(trn_lists);
            trn_cfg.evaluator = trainer::parse_evaluator(trn_evaluator);
            trn_cfg.quantum = trn_quantum.settings();
            std::ostringstream os;
            trainer::write_trace_jsonl(os, trainer::train(kernels::load_dataset(trn_data), trn_cfg, seed));
            text = os.str();
        } else if (std_cmd->parsed()) {
            study_cfg.sizes = parse_size_list(study_sizes);
            study_cfg.generating = study_kernel.spec();
            study_cfg.evaluator = trainer::parse_evaluator(study_evaluator);
            study_cfg.quantum = study_quantum.settings();
            std::ostringstream os;
            trainer::write_study_csv(os, trainer::relative_variance_study(study_cfg, seed));
            text = os.str();
        }
        emit(text, out_path, out);
        return 0;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError &e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const NumericError &e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

} // namespace qgp::cli
