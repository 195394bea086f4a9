#include "symsector/entanglement.hpp"

#include "symsector/errors.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace symsector {

double von_neumann_entropy(std::span<const double> spectrum) {
    double s = 0.0;
    for (double l : spectrum)
        if (l >= kSpectrumFloor) s -= l * std::log(l);
    return s;
}

double renyi_entropy(std::span<const double> spectrum, double q) {
    if (!(q >= 0.0)) throw InvalidArgument(fmt::format("renyi_entropy: order q={} must be >= 0", q));
    if (q == 1.0) return von_neumann_entropy(spectrum);
    if (q == 0.0) {
        const auto rank = std::count_if(spectrum.begin(), spectrum.end(), [](double l) { return l > 1e-12; });
        return std::log(static_cast<double>(rank));
    }
    if (std::isinf(q)) {
        const double top = *std::max_element(spectrum.begin(), spectrum.end());
        return -std::log(top);
    }
    double sum = 0.0;
    for (double l : spectrum)
        if (l >= kSpectrumFloor) sum += std::pow(l, q);
    return std::log(sum) / (1.0 - q);
}

double renyi_entropy(const DensityOperator& rho, double q) {
    return renyi_entropy(hermitian_spectrum(rho), q);
}

double rescaled_s(double eq_nats, double q, int n_a, int d) {
    if (q == 1.0) throw InvalidArgument("rescaled_s: s is undefined for q = 1");
    if (std::isinf(q)) throw InvalidArgument("rescaled_s: s is undefined for q = inf");
    return std::exp((1.0 - q) * (eq_nats - n_a * std::log(static_cast<double>(d))));
}

EntanglementRecord measure_entanglement(const PureState& state, double q, std::size_t head) {
    const DensityOperator rho = partial_trace(state);
    const std::vector<double> spectrum = hermitian_spectrum(rho);
    EntanglementRecord rec;
    rec.q = q;
    rec.e1 = von_neumann_entropy(spectrum);
    rec.eq = renyi_entropy(spectrum, q);
    rec.s = (q == 1.0 || std::isinf(q)) ? std::nan("") : rescaled_s(rec.eq, q, state.geometry().n_a(), state.geometry().d());
    rec.spectrum_head.assign(spectrum.begin(), spectrum.begin() + static_cast<std::ptrdiff_t>(std::min(head, spectrum.size())));
    rec.spectrum_head.resize(head, 0.0);
    return rec;
}

} // namespace symsector
