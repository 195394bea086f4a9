#include "symsector/sampling.hpp"

#include "symsector/errors.hpp"
#include "symsector/kernels.hpp"

#include <cmath>
#include <numbers>

namespace symsector {

std::mt19937_64 make_stream(SeedSpec seed, std::uint32_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed.master_seed), static_cast<std::uint32_t>(seed.master_seed >> 32),
                      static_cast<std::uint32_t>(seed.sample_index), static_cast<std::uint32_t>(seed.sample_index >> 32),
                      attempt};
    return std::mt19937_64(seq);
}

std::pair<double, double> standard_normal_pair(std::mt19937_64& gen) {
    // u1 in (0, 1], u2 in [0, 1), 53-bit resolution.
    constexpr double kScale = 0x1.0p-53;
    const double u1 = (static_cast<double>(gen() >> 11) + 1.0) * kScale;
    const double u2 = static_cast<double>(gen() >> 11) * kScale;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

PureState sample_sector_state(const std::shared_ptr<const SubspaceBasis>& basis, const QuditGeometry& geometry,
                              SeedSpec seed, StateForm form) {
    if (!basis || basis->dimension() == 0) throw InvalidArgument("sample_sector_state: empty basis");
    const std::size_t dim = basis->dimension();
    std::vector<cplx> coords(dim);
    for (std::uint32_t attempt = 0;; ++attempt) {
        std::mt19937_64 gen = make_stream(seed, attempt);
        for (std::size_t i = 0; i < dim; ++i) {
            const auto [re, im] = standard_normal_pair(gen);
            coords[i] = {re, im};
        }
        const double nsq = kernels::norm_sq(coords);
        if (nsq > 0.0 && std::isfinite(nsq)) {
            kernels::scale(coords, 1.0 / std::sqrt(nsq));
            break;
        }
    }
    if (form == StateForm::SectorCoordinates) return PureState(geometry, std::move(coords), basis);
    return PureState(geometry, expand_coordinates(*basis, coords));
}

} // namespace symsector
