#include "symsector/harness.hpp"

#include <cmath>
#include <limits>
#include <set>

#include <fmt/format.h>

namespace symsector {

double parse_order(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return kInfiniteOrder;
    std::size_t used = 0;
    double q = 0.0;
    try {
        q = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(fmt::format("q: cannot parse '{}'", text));
    }
    if (used != text.size()) throw ConfigError(fmt::format("q: cannot parse '{}'", text));
    return q;
}

std::string format_order(double q) {
    return std::isinf(q) ? std::string("inf") : fmt::format("{:.17g}", q);
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.n < 2) throw ConfigError("n must be >= 2");
    if (cfg.d < 2) throw ConfigError("d must be >= 2");
    if (cfg.n_a < 1 || cfg.n_a > cfg.n - 1) throw ConfigError(fmt::format("na must satisfy 1 <= na <= n-1 (got na={}, n={})", cfg.n_a, cfg.n));
    if (cfg.sector == SectorKind::Antisymmetric && cfg.n > cfg.d)
        throw ConfigError(fmt::format("antisymmetric sector does not exist for n > d (n={}, d={})", cfg.n, cfg.d));
    if (cfg.sector == SectorKind::Momentum && (cfg.k < 0 || cfg.k >= cfg.n))
        throw ConfigError(fmt::format("k must satisfy 0 <= k < n (got k={})", cfg.k));
    if (!(cfg.q >= 0.0)) throw ConfigError("q must be >= 0");
    if (!(cfg.bin_width > 0.0)) throw ConfigError("bin-width must be positive");
    if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
    if (!(cfg.eps > 0.0)) throw ConfigError("eps must be positive");
    if (!(cfg.boundaries.s1 < cfg.boundaries.s2)) throw ConfigError("s1 must be below s2");
    try {
        require_within_cap(checked_pow(cfg.d, cfg.n), "config");
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

SectorSpec sector_spec(const ExperimentConfig& cfg) {
    switch (cfg.sector) {
    case SectorKind::Full: return SectorSpec::full(cfg.n, cfg.d);
    case SectorKind::Symmetric: return SectorSpec::symmetric(cfg.n, cfg.d);
    case SectorKind::Antisymmetric: return SectorSpec::antisymmetric(cfg.n, cfg.d);
    case SectorKind::Momentum: return SectorSpec::momentum(cfg.n, cfg.d, cfg.k);
    }
    throw ConfigError("unknown sector");
}

QuditGeometry geometry(const ExperimentConfig& cfg) { return QuditGeometry(cfg.n, cfg.d, cfg.n_a); }

ExperimentConfig merge_config(const nlohmann::json& j, ExperimentConfig base) {
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    static const std::set<std::string> known{"sector", "k", "n", "d", "na", "q", "samples", "seed", "bin-width", "workers",
                                             "units", "eps", "split", "s1", "s2", "column", "out", "hist", "input"};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key)) throw ConfigError(fmt::format("config file: unknown key '{}'", key));
    try {
        if (j.contains("sector")) base.sector = parse_kind(j.at("sector").get<std::string>());
        if (j.contains("k")) base.k = j.at("k").get<int>();
        if (j.contains("n")) base.n = j.at("n").get<int>();
        if (j.contains("d")) base.d = j.at("d").get<int>();
        if (j.contains("na")) base.n_a = j.at("na").get<int>();
        if (j.contains("q")) base.q = j.at("q").is_string() ? parse_order(j.at("q").get<std::string>()) : j.at("q").get<double>();
        if (j.contains("samples")) base.samples = j.at("samples").get<std::uint64_t>();
        if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("bin-width")) base.bin_width = j.at("bin-width").get<double>();
        if (j.contains("workers")) base.workers = j.at("workers").get<unsigned>();
        if (j.contains("units")) {
            const auto u = j.at("units").get<std::string>();
            if (u != "nats" && u != "bits") throw ConfigError("units must be nats or bits");
            base.units = u == "bits" ? Units::Bits : Units::Nats;
        }
        if (j.contains("eps")) base.eps = j.at("eps").get<double>();
        if (j.contains("split")) base.split = j.at("split").get<double>();
        if (j.contains("s1")) base.boundaries.s1 = j.at("s1").get<double>();
        if (j.contains("s2")) base.boundaries.s2 = j.at("s2").get<double>();
        if (j.contains("column")) base.column = j.at("column").get<std::string>();
        if (j.contains("out")) base.out = j.at("out").get<std::string>();
        if (j.contains("hist")) base.hist_out = j.at("hist").get<std::string>();
        if (j.contains("input")) base.input = j.at("input").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(fmt::format("config file: {}", e.what()));
    } catch (const ConfigError&) {
        throw;
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    return base;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j{{"sector", std::string(kind_name(cfg.sector))},
                     {"n", cfg.n},
                     {"d", cfg.d},
                     {"na", cfg.n_a},
                     {"q", std::isinf(cfg.q) ? nlohmann::json("inf") : nlohmann::json(cfg.q)},
                     {"samples", cfg.samples},
                     {"seed", cfg.seed},
                     {"bin-width", cfg.bin_width},
                     {"units", cfg.units == Units::Bits ? "bits" : "nats"},
                     {"eps", cfg.eps},
                     {"s1", cfg.boundaries.s1},
                     {"s2", cfg.boundaries.s2},
                     {"column", cfg.column}};
    if (cfg.sector == SectorKind::Momentum) j["k"] = cfg.k;
    if (cfg.split) j["split"] = *cfg.split;
    return j;
}

} // namespace symsector
