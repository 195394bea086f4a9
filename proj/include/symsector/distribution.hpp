#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symsector {

struct Histogram {
    double bin_width = 0.0;
    double origin = 0.0;  ///< left edge of bin 0, floor(min / width) * width
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    double center(std::size_t bin) const { return origin + (static_cast<double>(bin) + 0.5) * bin_width; }
    double density(std::size_t bin) const { return static_cast<double>(counts[bin]) / (static_cast<double>(total) * bin_width); }
    std::vector<double> densities() const;
};

Histogram build_histogram(std::span<const double> samples, double bin_width);

/// Two-column "bin_center density" text.
std::string histogram_text(const Histogram& hist);

struct SummaryStats {
    double mean = 0.0;
    double std = 0.0;  ///< unbiased
    double sem = 0.0;
};
SummaryStats summary_stats(std::span<const double> samples);

/// amplitude · exp(-(s-μ)²/2σ²)
struct GaussianFit {
    double amplitude = 0.0;
    double mu = 0.0;
    double sigma = 0.0;
    double residual = 0.0;  ///< RMS density residual over the fitted bins
    double operator()(double s) const;
};

/// exp(a·s + b)
struct ExponentialFit {
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0;  ///< RMS log-density residual
    double operator()(double s) const;
};

/// Unweighted least squares over bins with center <= split_point (Levenberg–Marquardt).
GaussianFit fit_gaussian_left(const Histogram& hist, double split_point);

/// Line fit of log density over populated bins with center >= split_point.
ExponentialFit fit_exponential_right(const Histogram& hist, double split_point);

/// Bisection root of gauss(s) - exp(s) in [lo, hi] to |Δs| < 1e-6.
double intersection(const GaussianFit& gauss, const ExponentialFit& expfit, double lo, double hi);

enum class Phase { I, II, III };

struct PhaseBoundaries {
    double s1 = 1.25;
    double s2 = 2.0;
};

/// I: s < s1, II: s1 <= s < s2, III: s >= s2.
Phase classify_phase(double s, const PhaseBoundaries& boundaries = {});

struct PhaseCounts {
    std::uint64_t I = 0, II = 0, III = 0;
};
PhaseCounts count_phases(std::span<const double> samples, const PhaseBoundaries& boundaries = {});

struct FitReport {
    Histogram histogram;
    SummaryStats stats;
    double split_point = 0.0;
    std::optional<GaussianFit> gaussian;
    std::optional<ExponentialFit> exponential;
    std::optional<double> intersection;
    std::string gaussian_error, exponential_error, intersection_error;
    PhaseCounts phases;
};

/// The full pipeline; fit failures are recorded in the report, not thrown.
FitReport analyze_samples(std::span<const double> samples, double bin_width, std::optional<double> split_point = {},
                          const PhaseBoundaries& boundaries = {});

} // namespace symsector
