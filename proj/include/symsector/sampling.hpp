#pragma once

#include "symsector/sectors.hpp"
#include "symsector/state.hpp"

#include <cstdint>
#include <memory>
#include <random>

namespace symsector {

/// The random stream of one sample is a function of (master_seed, sample_index) only.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t sample_index = 0;
};

/// Generator for one sample's stream. `attempt` perturbs the stream for retries.
std::mt19937_64 make_stream(SeedSpec seed, std::uint32_t attempt = 0);

/// Box–Muller pair of independent standard normals from two uniform draws.
std::pair<double, double> standard_normal_pair(std::mt19937_64& gen);

enum class StateForm { SectorCoordinates, FullSpace };

/// Haar-random unit vector in the span of `basis`: i.i.d. complex Gaussian
/// coordinates, normalized.
PureState sample_sector_state(const std::shared_ptr<const SubspaceBasis>& basis, const QuditGeometry& geometry,
                              SeedSpec seed, StateForm form = StateForm::FullSpace);

} // namespace symsector
