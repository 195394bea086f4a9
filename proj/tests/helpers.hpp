#pragma once

#include "symsector/geometry.hpp"
#include "symsector/state.hpp"

#include <initializer_list>
#include <vector>

namespace testing {

using symsector::cplx;
using symsector::Index;
using symsector::PureState;
using symsector::QuditGeometry;

inline PureState basis_state(const QuditGeometry& g, Index idx) {
    std::vector<cplx> amps(g.full_dim(), 0.0);
    amps[idx] = 1.0;
    return PureState(g, std::move(amps));
}

/// Normalized superposition of basis states with the given weights.
inline PureState superposition(const QuditGeometry& g, std::initializer_list<std::pair<Index, cplx>> terms) {
    std::vector<cplx> amps(g.full_dim(), 0.0);
    double norm = 0.0;
    for (const auto& [idx, c] : terms) norm += std::norm(c);
    for (const auto& [idx, c] : terms) amps[idx] += c / std::sqrt(norm);
    return PureState(g, std::move(amps));
}

inline double max_gap(std::span<const cplx> a, std::span<const cplx> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace testing
