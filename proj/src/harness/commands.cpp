#include "symsector/harness.hpp"

#include "symsector/analytics.hpp"
#include "symsector/errors.hpp"
#include "symsector/kernels.hpp"
#include "symsector/sampling.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <ostream>
#include <thread>

#include <fmt/chrono.h>
#include <fmt/format.h>

namespace symsector {

namespace {

constexpr std::uint64_t kBlock = 4096;

nlohmann::json interval_json(const Interval& iv) {
    return {{"center_nats", iv.center},
            {"halfwidth_nats", iv.halfwidth},
            {"failure_prob", iv.failure_prob},
            {"eps_prime", iv.eps_prime},
            {"non_informative", iv.non_informative}};
}

template <typename Fn>
nlohmann::json guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const RegimeError& e) {
        return {{"error", e.what()}, {"reason", "requires prime n"}};
    } catch (const std::exception& e) {
        return {{"error", e.what()}};
    }
}

} // namespace

nlohmann::json to_json(const RunRecord& rec) {
    return {{"config", rec.config},
            {"version", rec.version},
            {"kernel", rec.kernel},
            {"timestamp", rec.timestamp},
            {"elapsed_seconds", rec.elapsed_seconds},
            {"workers", rec.workers},
            {"rows", rec.rows},
            {"first_row_hash", rec.first_row_hash},
            {"last_row_hash", rec.last_row_hash}};
}

RunRecord run_sampling(const ExperimentConfig& cfg, std::ostream& out) {
    validate(cfg);
    if (cfg.q == 1.0) throw ConfigError("q = 1 leaves s undefined; E1 is recorded in every row regardless of q");
    const auto start = std::chrono::steady_clock::now();
    const QuditGeometry geom = geometry(cfg);
    const auto basis = std::make_shared<const SubspaceBasis>(build_basis(sector_spec(cfg)));

    RunRecord rec;
    rec.config = config_to_json(cfg);
    rec.kernel = std::string(kernels::isa_name(kernels::active().isa));
    rec.workers = cfg.workers;
    rec.timestamp = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::time(nullptr)));

    out << kSampleHeader << '\n';
    std::vector<std::string> rows;
    for (std::uint64_t block_start = 0; block_start < cfg.samples; block_start += kBlock) {
        const std::uint64_t count = std::min(kBlock, cfg.samples - block_start);
        rows.assign(count, {});
        std::atomic<std::uint64_t> next{0};
        auto work = [&] {
            for (std::uint64_t i = next++; i < count; i = next++) {
                const std::uint64_t index = block_start + i;
                const PureState state = sample_sector_state(basis, geom, {cfg.seed, index});
                rows[i] = format_row(make_record(index, measure_entanglement(state, cfg.q)));
            }
        };
        const unsigned extra = static_cast<unsigned>(std::min<std::uint64_t>(cfg.workers, count)) - 1;
        {
            std::vector<std::jthread> pool;
            pool.reserve(extra);
            for (unsigned w = 0; w < extra; ++w) pool.emplace_back(work);
            work();
        }
        for (const std::string& row : rows) out << row;
        if (block_start == 0) rec.first_row_hash = fmt::format("{:016x}", fnv1a(rows.front()));
        rec.last_row_hash = fmt::format("{:016x}", fnv1a(rows.back()));
    }
    out.flush();
    if (!out) throw std::runtime_error("run_sampling: write failed");
    rec.rows = cfg.samples;
    rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

nlohmann::json fit_report_json(const FitReport& r) {
    nlohmann::json j;
    j["n_samples"] = r.histogram.total;
    j["bin_width"] = r.histogram.bin_width;
    j["split_point"] = r.split_point;
    j["stats"] = {{"mean", r.stats.mean}, {"std", r.stats.std}, {"sem", r.stats.sem}};
    if (r.gaussian)
        j["gaussian"] = {{"mu", r.gaussian->mu}, {"sigma", r.gaussian->sigma}, {"amplitude", r.gaussian->amplitude}, {"residual", r.gaussian->residual}};
    else
        j["gaussian"] = {{"error", r.gaussian_error}};
    if (r.exponential)
        j["exponential"] = {{"a", r.exponential->a}, {"b", r.exponential->b}, {"residual", r.exponential->residual}};
    else
        j["exponential"] = {{"error", r.exponential_error}};
    if (r.intersection) {
        j["intersection"] = *r.intersection;
    } else {
        j["intersection"] = nullptr;
        j["intersection_reason"] = r.intersection_error;
    }
    j["phase_counts"] = {{"I", r.phases.I}, {"II", r.phases.II}, {"III", r.phases.III}};
    return j;
}

AnalysisOutput run_analysis(const std::vector<SampleRecord>& rows, const ExperimentConfig& cfg) {
    if (rows.size() < 2) throw std::runtime_error(fmt::format("analysis needs at least 2 samples, file has {}", rows.size()));
    std::vector<double> values = sample_column(rows, cfg.column);
    const bool entropy_column = cfg.column.ends_with("_nats");
    if (entropy_column && cfg.units == Units::Bits)
        for (double& v : values) v /= std::numbers::ln2;
    for (double v : values)
        if (!std::isfinite(v)) throw std::runtime_error(fmt::format("column {} holds non-finite values", cfg.column));

    const FitReport report = analyze_samples(values, cfg.bin_width, cfg.split, cfg.boundaries);
    AnalysisOutput out;
    out.report = fit_report_json(report);
    nlohmann::json config{{"input", cfg.input}, {"column", cfg.column}, {"bin-width", cfg.bin_width},
                          {"s1", cfg.boundaries.s1}, {"s2", cfg.boundaries.s2}, {"units", cfg.units == Units::Bits ? "bits" : "nats"}};
    if (cfg.split) config["split"] = *cfg.split;
    out.report["config"] = config;
    out.report["column"] = cfg.column;
    out.histogram = histogram_text(report.histogram);
    return out;
}

nlohmann::json run_omega(const ExperimentConfig& cfg) {
    validate(cfg);
    const SectorSpec spec = sector_spec(cfg);
    const SubspaceBasis basis = build_basis(spec);
    const OmegaState omega = omega_reduced(basis, cfg.n_a);
    const double d_eff = effective_dimension(basis, cfg.n_a);
    nlohmann::json j;
    j["sector"] = {{"kind", std::string(kind_name(spec.kind))}, {"n", spec.n}, {"d", spec.d}, {"na", cfg.n_a}, {"dimension", basis.dimension()}};
    if (spec.kind == SectorKind::Momentum) j["sector"]["k"] = spec.k;
    j["S_omega_nats"] = omega.entropy;
    j["purity"] = omega.purity;
    j["rank"] = omega.rank;
    j["D_eff"] = d_eff;
    j["spectrum"] = omega.spectrum;
    j["bound_values"] = {{"eps", cfg.eps},
                         {"concentration_interval", guarded([&] { return interval_json(concentration_interval(spec, cfg.n_a, cfg.eps)); })},
                         {"minus_log_purity_nats", -std::log(omega.purity)}};
    if (cfg.units == Units::Bits) add_bit_units(j);
    return j;
}

nlohmann::json run_bounds(const ExperimentConfig& cfg) {
    validate(cfg);
    const SectorSpec spec = sector_spec(cfg);
    const int n = cfg.n, d = cfg.d, na = cfg.n_a;
    nlohmann::json j;
    j["config"] = config_to_json(cfg);
    j["sector_dimension"] = sector_dimension(spec);
    j["entropy_ceiling_nats"] = na * std::log(double(d));

    j["omega"] = guarded([&] {
        const SubspaceBasis basis = build_basis(spec);
        const OmegaState omega = omega_reduced(basis, na);
        return nlohmann::json{{"S_omega_nats", omega.entropy}, {"purity", omega.purity}, {"rank", omega.rank},
                              {"D_eff", effective_dimension(basis, na)}};
    });
    j["concentration"] = guarded([&] {
        const ConcentrationParams p = concentration_params(spec, na, cfg.eps);
        return nlohmann::json{{"eps", p.eps}, {"eps_prime", p.eps_prime}, {"D_eff", p.d_eff}, {"rank", p.rank},
                              {"R_bound", p.r_bound}, {"prob_bound", p.prob_bound}};
    });
    j["concentration_interval"] = guarded([&] { return interval_json(concentration_interval(spec, na, cfg.eps)); });
    j["page_lower_bound"] = guarded([&] {
        return nlohmann::json{{"value_nats", page_lower_bound(n, d, na)}, {"applies_to", "full sector"},
                              {"page_mean_nats", page_mean_entropy(n, d, na)}};
    });

    if (spec.kind == SectorKind::Symmetric || spec.kind == SectorKind::Antisymmetric)
        j["permutation_interval"] = guarded([&] { return interval_json(permutation_interval(n, d, na, cfg.eps, spec.kind == SectorKind::Symmetric ? 1 : -1)); });

    if (spec.kind == SectorKind::Momentum || spec.kind == SectorKind::Full) {
        const int k = spec.kind == SectorKind::Momentum ? spec.k : 0;
        j["momentum_purity_upper_bound"] = guarded([&] { return nlohmann::json{{"value", purity_upper_bound(n, d, na, k)}, {"m_theta", m_theta(n, k)}}; });
        j["sbar"] = guarded([&] {
            const SbarMomentum sb = sbar_momentum(n, d, na, k);
            return nlohmann::json{{"exact_nats", sb.exact}, {"asymptotic_nats", sb.asymptotic}};
        });
        j["momentum_lower_bound"] = guarded([&] {
            const MomentumLowerBound b = momentum_lower_bound(n, d, na, k, cfg.eps);
            return nlohmann::json{{"lower_bound_nats", b.lower_bound}, {"failure_prob", b.failure_prob}, {"eps_prime", b.eps_prime},
                                  {"eps_prime_exact", b.eps_prime_exact}, {"non_informative", b.non_informative}};
        });
        j["offdiagonal_bound"] = guarded([&] { return nlohmann::json{{"value", offdiagonal_bound(sector_dimension(SectorSpec::momentum(n, d, k)))}}; });
    }
    j["gamma_A"] = guarded([&] { return nlohmann::json{{"value", gamma_sum(na, d)}}; });
    if (cfg.units == Units::Bits) add_bit_units(j);
    return j;
}

nlohmann::json run_dims(int n, int d) {
    nlohmann::json j{{"n", n}, {"d", d}};
    j["full"] = sector_dimension(SectorSpec::full(n, d));
    j["sym"] = sector_dimension(SectorSpec::symmetric(n, d));
    j["antisym"] = n <= d ? nlohmann::json(sector_dimension(SectorSpec::antisymmetric(n, d))) : nlohmann::json(nullptr);
    nlohmann::json mom = nlohmann::json::array();
    Index total = 0;
    for (int k = 0; k < n; ++k) {
        const Index dim = sector_dimension(SectorSpec::momentum(n, d, k));
        mom.push_back(dim);
        total += dim;
    }
    j["mom"] = mom;
    j["mom_total"] = total;
    return j;
}

std::string basis_text(const SubspaceBasis& basis) {
    const SectorSpec& s = basis.spec;
    std::string out = fmt::format("# sector={} n={} d={}", kind_name(s.kind), s.n, s.d);
    if (s.kind == SectorKind::Momentum) out += fmt::format(" k={}", s.k);
    out += fmt::format(" dim={}\n", basis.dimension());
    for (const SparseVector& v : basis.elements) {
        bool first = true;
        for (const auto& [idx, c] : v.terms) {
            if (!first) out += " + ";
            first = false;
            const double re = std::abs(c.real()) < 1e-15 ? 0.0 : c.real();
            const double im = std::abs(c.imag()) < 1e-15 ? 0.0 : c.imag();
            out += fmt::format("{:.17g} {:.17g} @ {}", re, im, config_string(idx, s.n, s.d));
        }
        out += '\n';
    }
    return out;
}

void add_bit_units(nlohmann::json& j) {
    if (j.is_array()) {
        for (auto& x : j) add_bit_units(x);
        return;
    }
    if (!j.is_object()) return;
    nlohmann::json extra = nlohmann::json::object();
    for (auto& [key, value] : j.items()) {
        if (value.is_structured()) {
            add_bit_units(value);
        } else if (value.is_number() && key.ends_with("_nats")) {
            extra[key.substr(0, key.size() - 5) + "_bits"] = value.get<double>() / std::numbers::ln2;
        }
    }
    j.update(extra);
}

} // namespace symsector
