#pragma once

// Dense brute-force constructions used to cross-check the sector code.
// Everything here is O(d^{2n}) and only meant for d^n up to a few hundred.

#include "symsector/sectors.hpp"

#include <Eigen/Dense>

#include <vector>

namespace symsector::oracle {

/// Right rotation T|c_1..c_n> = |c_n c_1..c_{n-1}> as a dense permutation matrix.
Eigen::MatrixXcd translation_matrix(int n, int d);

/// Site permutation: the digit at site i moves to site perm[i].
Eigen::MatrixXcd site_permutation_matrix(int n, int d, const std::vector<int>& perm);

/// (1/n) Σ_j e^{-iθj} T^j
Eigen::MatrixXcd momentum_projector(int n, int d, int k);

/// (1/n!) Σ_σ sign^{|σ|} U_σ; sign is +1 or -1.
Eigen::MatrixXcd permutation_projector(int n, int d, int sign);

Eigen::MatrixXcd sector_projector(const SectorSpec& spec);

/// Common eigenspace dimension of the sector's generators, from the nullity of
/// Σ_g (U_g - λ_g)†(U_g - λ_g).
int eigenspace_dimension(const SectorSpec& spec);

/// tr_{Ā} P / tr P for the leading n_a sites.
Eigen::MatrixXcd reduced_normalized(const Eigen::MatrixXcd& projector, int n, int d, int n_a);

} // namespace symsector::oracle
