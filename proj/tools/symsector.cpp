#include "symsector/errors.hpp"
#include "symsector/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <fmt/format.h>
#include <fmt/ostream.h>

using namespace symsector;

namespace {

struct Flags {
    std::optional<std::string> sector, q, units, column, out, hist, input, config;
    std::optional<int> k, n, d, na;
    std::optional<std::uint64_t> samples, seed;
    std::optional<unsigned> workers;
    std::optional<double> bin_width, eps, split, s1, s2;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON file with the same keys as the flags; flags win");
    cmd->add_option("--sector", f.sector, "full, sym, antisym or mom")->check(CLI::IsMember({"full", "sym", "antisym", "mom"}));
    cmd->add_option("--k", f.k, "momentum index, 0 <= k < n");
    cmd->add_option("--n", f.n, "number of sites");
    cmd->add_option("--d", f.d, "local dimension");
    cmd->add_option("--na", f.na, "sites in block A (the leading ones)");
    cmd->add_option("--q", f.q, "Renyi order, or inf");
    cmd->add_option("--units", f.units, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));
    cmd->add_option("--eps", f.eps, "deviation for the concentration bounds");
    cmd->add_option("--out", f.out, "output file (stdout when absent)");
}

nlohmann::json flag_overrides(const Flags& f) {
    nlohmann::json j = nlohmann::json::object();
    auto put = [&](const char* key, const auto& opt) {
        if (opt) j[key] = *opt;
    };
    put("sector", f.sector);
    put("k", f.k);
    put("n", f.n);
    put("d", f.d);
    put("na", f.na);
    put("q", f.q);
    put("samples", f.samples);
    put("seed", f.seed);
    put("bin-width", f.bin_width);
    put("workers", f.workers);
    put("units", f.units);
    put("eps", f.eps);
    put("split", f.split);
    put("s1", f.s1);
    put("s2", f.s2);
    put("column", f.column);
    put("out", f.out);
    put("hist", f.hist);
    put("input", f.input);
    return j;
}

ExperimentConfig resolve(const Flags& f) {
    ExperimentConfig cfg;
    bool na_given = f.na.has_value();
    if (f.config) {
        std::ifstream in(*f.config);
        if (!in) throw ConfigError(fmt::format("cannot open config file {}", *f.config));
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(fmt::format("config file {}: {}", *f.config, e.what()));
        }
        na_given = na_given || j.contains("na");
        cfg = merge_config(j, cfg);
    }
    cfg = merge_config(flag_overrides(f), cfg);
    if (!na_given) cfg.n_a = std::max(1, cfg.n / 2);
    return cfg;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(fmt::format("cannot open {} for writing", path));
    out << text;
    if (!out) throw std::runtime_error(fmt::format("write to {} failed", path));
}

void write_json(const std::string& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

int cmd_sample(const ExperimentConfig& cfg) {
    validate(cfg);
    RunRecord rec;
    if (cfg.out.empty() || cfg.out == "-") {
        rec = run_sampling(cfg, std::cout);
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) throw std::runtime_error(fmt::format("cannot open {} for writing", cfg.out));
        rec = run_sampling(cfg, out);
        write_json(cfg.out + ".run.json", to_json(rec));
    }
    fmt::print(stderr, "sampled {} states in {:.2f} s ({} kernel, {} workers)\n", rec.rows, rec.elapsed_seconds, rec.kernel, rec.workers);
    return 0;
}

int cmd_analyze(const ExperimentConfig& cfg) {
    if (cfg.input.empty()) throw ConfigError("analyze needs --in <samples.csv>");
    if (!(cfg.bin_width > 0.0)) throw ConfigError("bin-width must be positive");
    if (!(cfg.boundaries.s1 < cfg.boundaries.s2)) throw ConfigError("s1 must be below s2");
    std::ifstream in(cfg.input);
    if (!in) throw std::runtime_error(fmt::format("cannot open {}", cfg.input));
    const std::vector<SampleRecord> rows = parse_samples(in);
    const AnalysisOutput result = run_analysis(rows, cfg);
    write_json(cfg.out, result.report);
    if (!cfg.hist_out.empty()) write_text(cfg.hist_out, result.histogram);
    return 0;
}

int cmd_verify(const Flags& f) {
    const VerificationReport report = run_verification(f.n.value_or(8), f.d.value_or(3));
    for (const Check& c : report.checks)
        fmt::print("{} {} deviation={:.3g} tolerance={:.3g}{}{}\n", c.pass ? "PASS" : "FAIL", c.name, c.deviation, c.tolerance,
                   c.detail.empty() ? "" : " ", c.detail);
    if (f.out) write_json(*f.out, to_json(report));
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement statistics of random states in symmetry sectors of qudit chains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Flags f;
    auto* sample = app.add_subcommand("sample", "draw random sector states and write one CSV row per sample");
    add_common(sample, f);
    sample->add_option("--samples", f.samples, "number of states");
    sample->add_option("--seed", f.seed, "master seed");
    sample->add_option("--workers", f.workers, "worker threads; output does not depend on it");

    auto* analyze = app.add_subcommand("analyze", "histogram, fits and phase counts for a sample file");
    add_common(analyze, f);
    analyze->add_option("--in", f.input, "sample CSV written by `sample`");
    analyze->add_option("--bin-width", f.bin_width, "histogram bin width");
    analyze->add_option("--split", f.split, "fit split point (default: the sample mean)");
    analyze->add_option("--hist", f.hist, "write the two-column histogram here");
    analyze->add_option("--column", f.column, "s, E1_nats, Eq_nats or lam1");
    analyze->add_option("--s1", f.s1, "phase I/II boundary");
    analyze->add_option("--s2", f.s2, "phase II/III boundary");

    auto* omega = app.add_subcommand("omega", "reduced sector projector Omega and its entropy");
    add_common(omega, f);
    auto* bounds = app.add_subcommand("bounds", "closed-form averages and concentration bounds");
    add_common(bounds, f);
    auto* basis = app.add_subcommand("basis", "list the sector basis");
    add_common(basis, f);
    auto* dims = app.add_subcommand("dims", "sector dimensions for every sector at (n, d)");
    add_common(dims, f);
    auto* verify = app.add_subcommand("verify", "cross-check the sector code against dense constructions; --n/--d set the maxima");
    add_common(verify, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(f);
        const ExperimentConfig cfg = resolve(f);
        if (sample->parsed()) return cmd_sample(cfg);
        if (analyze->parsed()) return cmd_analyze(cfg);
        if (omega->parsed()) {
            write_json(cfg.out, run_omega(cfg));
        } else if (bounds->parsed()) {
            write_json(cfg.out, run_bounds(cfg));
        } else if (basis->parsed()) {
            validate(cfg);
            write_text(cfg.out, basis_text(build_basis(sector_spec(cfg))));
        } else if (dims->parsed()) {
            if (cfg.n < 1 || cfg.d < 2) throw ConfigError("dims needs n >= 1 and d >= 2");
            write_json(cfg.out, run_dims(cfg.n, cfg.d));
        }
        return 0;
    } catch (const InvalidArgument& e) {
        fmt::print(stderr, "symsector: configuration rejected: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "symsector: {}\n", e.what());
        return 1;
    }
}
