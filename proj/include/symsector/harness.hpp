#pragma once

#include "symsector/distribution.hpp"
#include "symsector/entanglement.hpp"
#include "symsector/errors.hpp"
#include "symsector/sectors.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symsector {

inline constexpr const char* kToolVersion = "0.3.0";

/// Rejected configuration; the CLI maps this to exit code 2.
class ConfigError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

enum class Units { Nats, Bits };

struct ExperimentConfig {
    SectorKind sector = SectorKind::Full;
    int k = 0;
    int n = 10;
    int d = 2;
    int n_a = 5;
    double q = 2.0;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    double bin_width = 0.001;
    unsigned workers = 1;
    Units units = Units::Nats;
    double eps = 0.1;
    std::optional<double> split;
    PhaseBoundaries boundaries;
    std::string column = "s";
    std::string out;
    std::string hist_out;
    std::string input;
};

/// Throws ConfigError on anything the sector rules or the command forbid.
void validate(const ExperimentConfig& cfg);
SectorSpec sector_spec(const ExperimentConfig& cfg);
QuditGeometry geometry(const ExperimentConfig& cfg);

/// Overlay keys present in `j` onto `base`. Unknown keys are rejected.
ExperimentConfig merge_config(const nlohmann::json& j, ExperimentConfig base);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

double parse_order(const std::string& text);
std::string format_order(double q);

// --- sample files ---------------------------------------------------------

inline constexpr const char* kSampleHeader = "sample_index,E1_nats,Eq_nats,q,s,lam1,lam2,lam3,lam4";

struct SampleRecord {
    std::uint64_t sample_index = 0;
    double e1_nats = 0.0;
    double eq_nats = 0.0;
    double q = 2.0;
    double s = 0.0;
    std::array<double, 4> lam{};
};

SampleRecord make_record(std::uint64_t index, const EntanglementRecord& rec);
std::string format_row(const SampleRecord& rec);
/// Throws ParseError carrying the 1-based line number.
std::vector<SampleRecord> parse_samples(std::istream& in);
std::vector<double> sample_column(const std::vector<SampleRecord>& rows, const std::string& column);

std::uint64_t fnv1a(std::string_view text);

// --- commands -------------------------------------------------------------

struct RunRecord {
    nlohmann::json config;
    std::string version = kToolVersion;
    std::string kernel;
    std::string timestamp;
    double elapsed_seconds = 0.0;
    unsigned workers = 1;
    std::uint64_t rows = 0;
    std::string first_row_hash;
    std::string last_row_hash;
};
nlohmann::json to_json(const RunRecord& rec);

/// Draw cfg.samples states from the configured sector and stream one row per
/// sample, in index order, to `out`. Output depends only on (config, seed).
RunRecord run_sampling(const ExperimentConfig& cfg, std::ostream& out);

struct AnalysisOutput {
    nlohmann::json report;
    std::string histogram;
};
AnalysisOutput run_analysis(const std::vector<SampleRecord>& rows, const ExperimentConfig& cfg);
nlohmann::json fit_report_json(const FitReport& report);

nlohmann::json run_omega(const ExperimentConfig& cfg);
nlohmann::json run_bounds(const ExperimentConfig& cfg);
nlohmann::json run_dims(int n, int d);
std::string basis_text(const SubspaceBasis& basis);

/// Adds a `<name>_bits` sibling for every `<name>_nats` number, recursively.
void add_bit_units(nlohmann::json& j);

// --- verification ---------------------------------------------------------

struct Check {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool all_pass() const;
};

VerificationReport run_verification(int max_n, int max_d);
nlohmann::json to_json(const VerificationReport& report);

} // namespace symsector
