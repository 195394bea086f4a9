#include "symsector/distribution.hpp"

#include "symsector/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace symsector {

std::vector<double> Histogram::densities() const {
    std::vector<double> out(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) out[i] = density(i);
    return out;
}

Histogram build_histogram(std::span<const double> samples, double bin_width) {
    if (samples.empty()) throw InvalidArgument("build_histogram: no samples");
    if (!(bin_width > 0.0)) throw InvalidArgument("build_histogram: bin width must be positive");
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    if (!std::isfinite(*lo_it) || !std::isfinite(*hi_it)) throw InvalidArgument("build_histogram: non-finite sample");
    Histogram h;
    h.bin_width = bin_width;
    h.origin = std::floor(*lo_it / bin_width) * bin_width;
    const auto bins = static_cast<std::size_t>(std::floor((*hi_it - h.origin) / bin_width)) + 1;
    h.counts.assign(bins, 0);
    for (double x : samples) {
        auto bin = static_cast<std::ptrdiff_t>(std::floor((x - h.origin) / bin_width));
        bin = std::clamp<std::ptrdiff_t>(bin, 0, static_cast<std::ptrdiff_t>(bins) - 1);
        ++h.counts[static_cast<std::size_t>(bin)];
    }
    h.total = samples.size();
    return h;
}

std::string histogram_text(const Histogram& hist) {
    std::string out;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) out += fmt::format("{:.17g} {:.17g}\n", hist.center(i), hist.density(i));
    return out;
}

SummaryStats summary_stats(std::span<const double> samples) {
    if (samples.size() < 2) throw InvalidArgument("summary_stats: need at least 2 samples");
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    return {mean, sd, sd / std::sqrt(n)};
}

double GaussianFit::operator()(double s) const {
    const double z = (s - mu) / sigma;
    return amplitude * std::exp(-0.5 * z * z);
}

double ExponentialFit::operator()(double s) const { return std::exp(a * s + b); }

GaussianFit fit_gaussian_left(const Histogram& hist, double split_point) {
    std::vector<double> xs, ys;
    std::size_t populated = 0;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        if (hist.center(i) > split_point) break;
        xs.push_back(hist.center(i));
        ys.push_back(hist.density(i));
        if (hist.counts[i] > 0) ++populated;
    }
    if (populated < 5) throw FitError(fmt::format("fit_gaussian_left: {} populated bins left of {} (need 5)", populated, split_point));

    // Start from the moments of the left-half density and its peak.
    double wsum = 0.0;
    for (double y : ys) wsum += y;
    const std::size_t peak = static_cast<std::size_t>(std::max_element(ys.begin(), ys.end()) - ys.begin());
    Eigen::Vector3d p(ys[peak], xs[peak], 0.0);
    double m2 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) m2 += ys[i] * (xs[i] - p[1]) * (xs[i] - p[1]);
    p[2] = std::max(std::sqrt(m2 / wsum), hist.bin_width);

    auto sse = [&](const Eigen::Vector3d& q) {
        double s = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double z = (xs[i] - q[1]) / q[2];
            const double r = q[0] * std::exp(-0.5 * z * z) - ys[i];
            s += r * r;
        }
        return s;
    };

    double lambda = 1e-3;
    double cost = sse(p);
    for (int iter = 0; iter < 500; ++iter) {
        Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
        Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double z = (xs[i] - p[1]) / p[2];
            const double e = std::exp(-0.5 * z * z);
            const double r = p[0] * e - ys[i];
            const Eigen::Vector3d g(e, p[0] * e * z / p[2], p[0] * e * z * z / p[2]);
            jtj += g * g.transpose();
            jtr += g * r;
        }
        bool improved = false;
        while (lambda < 1e12) {
            Eigen::Matrix3d a = jtj;
            a.diagonal() *= (1.0 + lambda);
            const Eigen::Vector3d step = a.ldlt().solve(-jtr);
            Eigen::Vector3d trial = p + step;
            trial[2] = std::abs(trial[2]);
            const double c = sse(trial);
            if (std::isfinite(c) && c < cost) {
                const double rel = (cost - c) / std::max(cost, 1e-300);
                p = trial;
                cost = c;
                lambda = std::max(lambda / 10.0, 1e-12);
                improved = true;
                if (rel < 1e-14) iter = 500;
                break;
            }
            lambda *= 10.0;
        }
        if (!improved) break;
    }
    if (!(p[2] > 0.0) || !std::isfinite(p[1])) throw FitError("fit_gaussian_left: did not converge");
    return {p[0], p[1], p[2], std::sqrt(cost / static_cast<double>(xs.size()))};
}

ExponentialFit fit_exponential_right(const Histogram& hist, double split_point) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        if (hist.center(i) < split_point || hist.counts[i] == 0) continue;
        xs.push_back(hist.center(i));
        ys.push_back(std::log(hist.density(i)));
    }
    if (xs.size() < 5) throw FitError(fmt::format("fit_exponential_right: {} populated bins right of {} (need 5)", xs.size(), split_point));
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) throw FitError("fit_exponential_right: degenerate abscissae");
    ExponentialFit fit;
    fit.a = sxy / sxx;
    fit.b = my - fit.a * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = fit.a * xs[i] + fit.b - ys[i];
        rss += r * r;
    }
    fit.residual = std::sqrt(rss / n);
    return fit;
}

double intersection(const GaussianFit& gauss, const ExponentialFit& expfit, double lo, double hi) {
    if (!(lo < hi)) throw InvalidArgument("intersection: empty search interval");
    auto f = [&](double s) { return gauss(s) - expfit(s); };
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0)) throw FitError(fmt::format("intersection: no sign change on [{}, {}]", lo, hi));
    while (hi - lo >= 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Phase classify_phase(double s, const PhaseBoundaries& boundaries) {
    if (s < boundaries.s1) return Phase::I;
    if (s < boundaries.s2) return Phase::II;
    return Phase::III;
}

PhaseCounts count_phases(std::span<const double> samples, const PhaseBoundaries& boundaries) {
    PhaseCounts c;
    for (double s : samples) {
        switch (classify_phase(s, boundaries)) {
        case Phase::I: ++c.I; break;
        case Phase::II: ++c.II; break;
        case Phase::III: ++c.III; break;
        }
    }
    return c;
}

FitReport analyze_samples(std::span<const double> samples, double bin_width, std::optional<double> split_point,
                          const PhaseBoundaries& boundaries) {
    FitReport r;
    r.stats = summary_stats(samples);
    r.histogram = build_histogram(samples, bin_width);
    r.split_point = split_point.value_or(r.stats.mean);
    r.phases = count_phases(samples, boundaries);
    try {
        r.gaussian = fit_gaussian_left(r.histogram, r.split_point);
    } catch (const FitError& e) {
        r.gaussian_error = e.what();
    }
    try {
        r.exponential = fit_exponential_right(r.histogram, r.split_point);
    } catch (const FitError& e) {
        r.exponential_error = e.what();
    }
    if (r.gaussian && r.exponential) {
        // The two curves can cross more than once (far tails); take the crossing
        // closest to the split, scanning bin centers for a sign change.
        const Histogram& h = r.histogram;
        auto gap = [&](double s) { return (*r.gaussian)(s) - (*r.exponential)(s); };
        std::optional<std::pair<double, double>> bracket;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b + 1 < h.counts.size(); ++b) {
            const double lo = h.center(b), hi = h.center(b + 1);
            if (!(gap(lo) * gap(hi) <= 0.0)) continue;
            const double distance = std::abs(0.5 * (lo + hi) - r.split_point);
            if (distance < best) best = distance, bracket = std::pair{lo, hi};
        }
        if (bracket) {
            r.intersection = intersection(*r.gaussian, *r.exponential, bracket->first, bracket->second);
        } else {
            r.intersection_error = fmt::format("no crossing between {} and {}", h.center(0), h.center(h.counts.size() - 1));
        }
    } else {
        r.intersection_error = "fits unavailable";
    }
    return r;
}

} // namespace symsector
