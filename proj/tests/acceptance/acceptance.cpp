// One PASS/FAIL line per acceptance criterion; exits 1 if any criterion fails.

#include "symsector/analytics.hpp"
#include "symsector/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include <fmt/format.h>

using namespace symsector;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<SampleRecord> draw(SectorKind kind, int k, std::uint64_t samples, std::uint64_t seed, int n = 10, int n_a = 5) {
    ExperimentConfig cfg;
    cfg.sector = kind;
    cfg.k = k;
    cfg.n = n;
    cfg.n_a = n_a;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.workers = worker_count();
    std::stringstream buffer;
    run_sampling(cfg, buffer);
    return parse_samples(buffer);
}

SummaryStats column_stats(const std::vector<SampleRecord>& rows, const std::string& column) {
    return summary_stats(sample_column(rows, column));
}

// Lazily shared so the verification pass runs once for criteria 1-4.
const VerificationReport& verification() {
    static const VerificationReport report = run_verification(8, 3);
    return report;
}

Outcome checks_with_prefix(std::initializer_list<std::string_view> prefixes) {
    Outcome out{true, {}};
    int count = 0;
    for (const Check& c : verification().checks) {
        bool match = false;
        for (std::string_view p : prefixes) match = match || std::string_view(c.name).starts_with(p);
        if (!match) continue;
        ++count;
        if (!c.pass) {
            out.pass = false;
            out.detail += fmt::format(" {} (dev {:.3g} > {:.3g} {})", c.name, c.deviation, c.tolerance, c.detail);
        }
    }
    if (count == 0) return {false, "no matching checks ran"};
    if (out.pass) out.detail = fmt::format("{} checks passed", count);
    return out;
}

Outcome criterion1() { return checks_with_prefix({"n4_momentum_"}); }

Outcome criterion2() {
    // run_verification(8, 3) covers d=2 with n <= 8 and d=3 with n <= 5 (d^n <= 256).
    return checks_with_prefix({"dimension_oracle", "momentum_dimensions_sum"});
}

Outcome criterion3() { return checks_with_prefix({"omega_permutation_closed_form_"}); }

Outcome criterion4() {
    return checks_with_prefix({"momentum_omega_brute_force_", "momentum_diagonal_formula_", "momentum_offdiagonal_bound_",
                               "momentum_block_structure_", "momentum_purity_upper_bound_", "momentum_n5_"});
}

Outcome criterion5() {
    const auto rows = draw(SectorKind::Full, 0, 10000, 1);
    const SummaryStats e = column_stats(rows, "E1_nats");
    const double bound = page_lower_bound(10, 2, 5);
    const double page = page_mean_entropy(10, 2, 5);
    const bool pass = e.mean >= bound && std::abs(e.mean - page) <= 0.01;
    return {pass, fmt::format("mean E = {:.5f} (sem {:.1e}); bound {:.5f}; exact mean {:.5f}", e.mean, e.sem, bound, page)};
}

Outcome criterion6() {
    struct Target {
        int k;
        double mu, sigma;
    };
    Outcome out{true, {}};
    for (const Target t : {Target{0, 1.9988, 0.0724}, Target{5, 1.9933, 0.0631}}) {
        const auto rows = draw(SectorKind::Momentum, t.k, 100000, 1);
        ExperimentConfig cfg;
        cfg.bin_width = 0.001;
        const nlohmann::json report = run_analysis(rows, cfg).report;
        if (!report["gaussian"].contains("mu")) return {false, fmt::format("k={}: gaussian fit failed: {}", t.k, report["gaussian"].dump())};
        const double mu = report["gaussian"]["mu"].get<double>();
        const double sigma = report["gaussian"]["sigma"].get<double>();
        const bool ok = std::abs(mu - t.mu) <= 0.01 && std::abs(sigma - t.sigma) <= 0.01;
        out.pass = out.pass && ok;
        out.detail += fmt::format("k={}: mu {:.4f} (target {:.4f}, off {:.4f}), sigma {:.4f} (target {:.4f}, off {:.4f}); ", t.k, mu, t.mu,
                                  std::abs(mu - t.mu), sigma, t.sigma, std::abs(sigma - t.sigma));
    }
    return out;
}

Outcome criterion7() {
    const auto rows = draw(SectorKind::Full, 0, 100000, 2);
    const SummaryStats s = column_stats(rows, "s");
    const double exact = 32.0 * haar_mean_purity(10, 2, 5);
    return {std::abs(s.mean - 1.998) <= 0.01, fmt::format("mean s = {:.5f} (sem {:.1e}); Haar value {:.5f}", s.mean, s.sem, exact)};
}

Outcome criterion8() {
    const SummaryStats full = column_stats(draw(SectorKind::Full, 0, 10000, 3), "E1_nats");
    const SummaryStats sym = column_stats(draw(SectorKind::Symmetric, 0, 10000, 3), "E1_nats");
    const SummaryStats k0 = column_stats(draw(SectorKind::Momentum, 0, 10000, 3), "E1_nats");
    const SummaryStats k5 = column_stats(draw(SectorKind::Momentum, 5, 10000, 3), "E1_nats");
    const bool sym_ok = sym.mean < std::log(6.0) && full.mean - sym.mean >= 1.0;
    const bool mom_mean_ok = std::abs(k0.mean - full.mean) <= 0.05 && std::abs(k5.mean - full.mean) <= 0.05;
    const bool mom_std_ok = k0.std > full.std && k5.std > full.std;
    return {sym_ok && mom_mean_ok && mom_std_ok,
            fmt::format("means full {:.4f} sym {:.4f} k0 {:.4f} k5 {:.4f}; std full {:.4f} k0 {:.4f} k5 {:.4f}", full.mean, sym.mean,
                        k0.mean, k5.mean, full.std, k0.std, k5.std)};
}

Outcome criterion9() {
    const SectorSpec spec = SectorSpec::momentum(7, 2, 1);
    const double eps = 0.5;
    const Interval iv = concentration_interval(spec, 2, eps);
    const auto rows = draw(SectorKind::Momentum, 1, 10000, 4, 7, 2);
    std::uint64_t violations = 0;
    for (const SampleRecord& r : rows)
        if (std::abs(r.e1_nats - iv.center) > iv.halfwidth) ++violations;
    const double fraction = double(violations) / double(rows.size());
    return {fraction <= iv.failure_prob,
            fmt::format("S(Omega) {:.4f}, halfwidth {:.4f}, violations {:.4f} <= {:.4f}", iv.center, iv.halfwidth, fraction, iv.failure_prob)};
}

Outcome criterion10() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "symsector_acceptance";
    fs::create_directories(dir);
    std::vector<std::string> contents;
    for (int repeat = 0; repeat < 2; ++repeat) {
        for (int workers : {1, 4, 8}) {
            const fs::path out = dir / fmt::format("det_{}_{}.csv", workers, repeat);
            const std::string cmd = fmt::format("{} sample --sector mom --k 3 --n 10 --na 5 --samples 6000 --seed 11 --workers {} --out {} 2>/dev/null",
                                                SYMSECTOR_CLI, workers, out.string());
            const int status = std::system(cmd.c_str());
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, fmt::format("sample exited abnormally ({})", cmd)};
            std::ifstream in(out, std::ios::binary);
            std::ostringstream s;
            s << in.rdbuf();
            contents.push_back(s.str());
        }
    }
    for (const std::string& c : contents)
        if (c != contents.front()) return {false, "files differ"};
    return {true, fmt::format("6 runs (workers 1/4/8, twice), {} bytes each, identical", contents.front().size())};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 n=4 momentum dimensions and basis sets", criterion1},
        {"2 dimensions equal brute-force eigenspace ranks", criterion2},
        {"3 permutation-sector Omega closed form", criterion3},
        {"4 momentum Omega diagonal/off-diagonal/blocks at prime n", criterion4},
        {"5 full-sector mean entanglement vs exact Haar mean", criterion5},
        {"6 momentum-sector Gaussian fit parameters", criterion6},
        {"7 full-sector mean rescaled s", criterion7},
        {"8 symmetry suppression ordering", criterion8},
        {"9 empirical concentration at n=7", criterion9},
        {"10 byte-identical output across worker counts", criterion10},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, fmt::format("threw: {}", e.what())};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        fmt::print("[{}] criterion {} :: {} ({:.1f} s)\n", o.pass ? "PASS" : "FAIL", name, o.detail, secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
