#include "symsector/oracles.hpp"

#include "symsector/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace symsector::oracle {

namespace {

// Deliberately independent of geometry.cpp: digits are recovered by repeated
// division with site 0 most significant.
std::vector<int> digits_of(long long idx, int n, int d) {
    std::vector<int> out(n);
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return out;
}

long long index_of(const std::vector<int>& digits, int d) {
    long long idx = 0;
    for (int x : digits) idx = idx * d + x;
    return idx;
}

long long dense_dim(int n, int d) {
    long long dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    if (dim > 4096) throw SizeCapExceeded("oracle: dense construction limited to d^n <= 4096");
    return dim;
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

} // namespace

Eigen::MatrixXcd translation_matrix(int n, int d) {
    const long long dim = dense_dim(n, d);
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim, dim);
    for (long long idx = 0; idx < dim; ++idx) {
        std::vector<int> c = digits_of(idx, n, d);
        std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
        t(index_of(c, d), idx) = 1.0;
    }
    return t;
}

Eigen::MatrixXcd site_permutation_matrix(int n, int d, const std::vector<int>& perm) {
    const long long dim = dense_dim(n, d);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (long long idx = 0; idx < dim; ++idx) {
        const std::vector<int> c = digits_of(idx, n, d);
        std::vector<int> moved(n);
        for (int i = 0; i < n; ++i) moved[perm[i]] = c[i];
        u(index_of(moved, d), idx) = 1.0;
    }
    return u;
}

Eigen::MatrixXcd momentum_projector(int n, int d, int k) {
    const Eigen::MatrixXcd t = translation_matrix(n, d);
    const double theta = 2.0 * std::numbers::pi * k / n;
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(t.rows(), t.cols());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(t.rows(), t.cols());
    for (int j = 0; j < n; ++j) {
        sum += std::polar(1.0, -theta * j) * power;
        power = t * power;
    }
    return sum / static_cast<double>(n);
}

Eigen::MatrixXcd permutation_projector(int n, int d, int sign) {
    const long long dim = dense_dim(n, d);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    long long count = 0;
    do {
        const double weight = sign < 0 ? permutation_sign(perm) : 1.0;
        sum += weight * site_permutation_matrix(n, d, perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / static_cast<double>(count);
}

Eigen::MatrixXcd sector_projector(const SectorSpec& spec) {
    switch (spec.kind) {
    case SectorKind::Full: {
        const long long dim = dense_dim(spec.n, spec.d);
        return Eigen::MatrixXcd::Identity(dim, dim);
    }
    case SectorKind::Symmetric: return permutation_projector(spec.n, spec.d, +1);
    case SectorKind::Antisymmetric: return permutation_projector(spec.n, spec.d, -1);
    case SectorKind::Momentum: return momentum_projector(spec.n, spec.d, spec.k);
    }
    throw InvalidArgument("oracle: unknown sector kind");
}

int eigenspace_dimension(const SectorSpec& spec) {
    const int n = spec.n, d = spec.d;
    const long long dim = dense_dim(n, d);
    std::vector<std::pair<Eigen::MatrixXcd, cplx>> generators;
    std::vector<int> swap01(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    if (n >= 2) std::swap(swap01[0], swap01[1]);
    const double odd = (n - 1) % 2 == 0 ? 1.0 : -1.0;
    switch (spec.kind) {
    case SectorKind::Full: return static_cast<int>(dim);
    case SectorKind::Symmetric:
        if (n >= 2) generators.emplace_back(site_permutation_matrix(n, d, swap01), 1.0);
        generators.emplace_back(translation_matrix(n, d), 1.0);
        break;
    case SectorKind::Antisymmetric:
        if (n >= 2) generators.emplace_back(site_permutation_matrix(n, d, swap01), -1.0);
        generators.emplace_back(translation_matrix(n, d), odd);
        break;
    case SectorKind::Momentum:
        generators.emplace_back(translation_matrix(n, d), std::polar(1.0, 2.0 * std::numbers::pi * spec.k / n));
        break;
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [u, lambda] : generators) {
        const Eigen::MatrixXcd shifted = u - lambda * Eigen::MatrixXcd::Identity(dim, dim);
        h += shifted.adjoint() * shifted;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw EigenSolverError("oracle: eigensolver failed");
    return static_cast<int>((solver.eigenvalues().array() < 1e-8).count());
}

Eigen::MatrixXcd reduced_normalized(const Eigen::MatrixXcd& projector, int n, int d, int n_a) {
    long long da = 1, db = 1;
    for (int i = 0; i < n_a; ++i) da *= d;
    for (int i = n_a; i < n; ++i) db *= d;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da, da);
    for (long long a = 0; a < da; ++a)
        for (long long b = 0; b < da; ++b)
            for (long long v = 0; v < db; ++v) out(a, b) += projector(a * db + v, b * db + v);
    return out / projector.trace().real();
}

} // namespace symsector::oracle
