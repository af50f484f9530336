#pragma once

// Cartan subalgebra and root extraction for the compact e8 table.
//
// The Cartan candidate is the 8 commuting basis wedges e0^e1, e2^e3,
// e4^e5, e6^e7 in each so(8) summand. Exact steps: pairwise commutation
// and centralizer dimension (rational kernel intersection). The joint
// eigendecomposition of the 8 adjoint matrices is the one numerically
// assisted step: a fixed generic integer combination (weights 5^a)
// separates all joint eigenvalues, the 240 nonzero weight vectors are
// rounded to half-integers, and every rounded root is re-validated
// against the exact adjoint matrices on the numerical eigenvector.

#include "e8alg/killing.hpp"
#include "e8alg/structure_table.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace e8alg {

struct RootDatum {
    std::vector<int> cartan_indices;                // 8 basis indices
    std::vector<std::string> cartan_labels;
    std::vector<std::array<Rational, 8>> roots;     // 240, sorted lexicographically
    Rational common_norm_sq;                        // coordinate dot product, equal for all roots
    std::map<int, std::uint64_t> pairing_census;    // 2<a,b>/<b,b> -> ordered-pair count
    double max_round_residual = 0;                  // |float weight - rounded|
    double max_eigen_residual = 0;                  // ||ad v - i w v|| per cartan direction
};

inline std::vector<int> e8_cartan_indices() {
    std::vector<int> idx;
    for (int base : {0, 28})
        for (int k = 0; k < 4; ++k) idx.push_back(base + wedge_index(2 * k, 2 * k + 1));
    return idx;
}

inline RootDatum cartan_and_roots(const StructureTable& table, double cluster_tol = 1e-9,
                                  double residual_tol = 1e-6) {
    if (table.algebra != AlgebraId::e8)
        throw std::invalid_argument("root extraction expects the compact e8 table");

    RootDatum rd;
    rd.cartan_indices = e8_cartan_indices();
    for (const int i : rd.cartan_indices)
        rd.cartan_labels.push_back(table.basis_labels[static_cast<std::size_t>(i)]);

    const TableRows rows(table);

    // Exact: pairwise commuting.
    for (const int a : rd.cartan_indices)
        for (const int b : rd.cartan_indices)
            if (a != b && !rows(a, b).empty())
                throw std::runtime_error("cartan candidate does not commute");

    // Exact: centralizer dimension must be 8.
    const int centralizer = joint_kernel_dim(rows, rd.cartan_indices);
    if (centralizer != 8)
        throw std::runtime_error("cartan centralizer has dimension " +
                                 std::to_string(centralizer) + ", expected 8");

    // Numeric: joint diagonalization.
    const int n = table.dim;
    std::array<Eigen::MatrixXd, 8> ad{};
    for (int a = 0; a < 8; ++a) {
        ad[static_cast<std::size_t>(a)] = Eigen::MatrixXd::Zero(n, n);
        const int g = rd.cartan_indices[static_cast<std::size_t>(a)];
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : rows(g, j))
                ad[static_cast<std::size_t>(a)](k, j) = to_double(c);
    }

    // Generic combination: weight coordinates lie in {0,±1/2,±1}, so
    // digits of 2*(a-b) in base 5 are bounded by 4 and distinct roots
    // cannot collide.
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    double coeff = 1;
    for (int a = 0; a < 8; ++a, coeff *= 5) m += coeff * ad[static_cast<std::size_t>(a)];

    Eigen::MatrixXcd h = std::complex<double>(0, 1) * m.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");

    const double eig_scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
    int zero_count = 0;
    std::vector<std::array<Rational, 8>> roots;
    for (int col = 0; col < n; ++col) {
        if (std::abs(solver.eigenvalues()(col)) < cluster_tol * eig_scale) {
            ++zero_count;
            continue;
        }
        const Eigen::VectorXcd v = solver.eigenvectors().col(col);
        std::array<Rational, 8> root;
        for (int a = 0; a < 8; ++a) {
            // i*ad_a v = w v with w real; w = -Im(v^* ad_a v).
            const Eigen::VectorXcd av = ad[static_cast<std::size_t>(a)] * v;
            const double w = -(v.dot(av)).imag() / v.squaredNorm();
            const double doubled = std::round(2 * w);
            rd.max_round_residual = std::max(rd.max_round_residual, std::abs(2 * w - doubled) / 2);
            if (std::abs(2 * w - doubled) / 2 > residual_tol)
                throw std::runtime_error("weight does not round to a half-integer");
            root[static_cast<std::size_t>(a)] =
                Rational(static_cast<std::int64_t>(doubled), 2);
            // Re-validate the rounded weight against the exact adjoint:
            // ad_a v should equal -i w v.
            const std::complex<double> iw(0, to_double(root[static_cast<std::size_t>(a)]));
            const double res = (av + iw * v).norm() / v.norm();
            rd.max_eigen_residual = std::max(rd.max_eigen_residual, res);
            if (res > residual_tol)
                throw std::runtime_error("rounded weight fails adjoint validation");
        }
        roots.push_back(root);
    }

    if (zero_count != 8)
        throw std::runtime_error("zero-weight cluster has dimension " +
                                 std::to_string(zero_count) + ", expected 8");
    if (roots.size() != 240)
        throw std::runtime_error("found " + std::to_string(roots.size()) +
                                 " roots, expected 240");

    std::sort(roots.begin(), roots.end());
    rd.roots = std::move(roots);

    // Closure under negation.
    for (const auto& r : rd.roots) {
        std::array<Rational, 8> neg;
        for (int a = 0; a < 8; ++a) neg[static_cast<std::size_t>(a)] = -r[static_cast<std::size_t>(a)];
        if (!std::binary_search(rd.roots.begin(), rd.roots.end(), neg))
            throw std::runtime_error("root system is not closed under negation");
    }

    // Equal coordinate norms. The Killing form restricted to the Cartan
    // is a negative multiple of the identity in these coordinates, so
    // equal dot products mean equal Killing-induced lengths.
    const auto dot = [](const std::array<Rational, 8>& x, const std::array<Rational, 8>& y) {
        Rational s = 0;
        for (int a = 0; a < 8; ++a)
            s += x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(a)];
        return s;
    };
    rd.common_norm_sq = dot(rd.roots.front(), rd.roots.front());
    for (const auto& r : rd.roots)
        if (dot(r, r) != rd.common_norm_sq)
            throw std::runtime_error("roots have unequal lengths");

    // Pairing census over ordered pairs; ratios must be integers in [-2, 2].
    for (const auto& a : rd.roots)
        for (const auto& b : rd.roots) {
            const Rational ratio = 2 * dot(a, b) / dot(b, b);
            if (rat_den(ratio) != 1 || abs(rat_num(ratio)) > 2)
                throw std::runtime_error("invalid Cartan pairing ratio " + to_string(ratio));
            ++rd.pairing_census[static_cast<int>(rat_num(ratio))];
        }
    return rd;
}

} // namespace e8alg
