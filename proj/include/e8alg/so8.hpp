#pragma once

// so(8): skew-symmetric 8x8 rational matrices, the wedge map
// x ∧ y = xyᵀ - yxᵀ, and the triality automorphisms λ, λ², κ with
// λ³ = κ² = 1 and κλ² = λκ.
//
// λ is defined on generators by λ(a ∧ b) = -½ L_b̄ L_a for pure a; the
// extension to all of so(8) decomposes the input over the wedge basis
// {e_i ∧ e_j}_{i<j}, using λ(e0 ∧ e_j) = ½ L_{e_j} for the impure
// wedges. The sign of the generator formula is pinned by the
// infinitesimal triality identity (Au)v + u(λ(A)v) = κλ²(A)(uv), which
// determines λ uniquely; with the opposite sign λ³ = -1 and the f4/e8
// Jacobi identities fail. λ² is built independently from
// λ²(a ∧ b) = -½ R_b̄ R_a, so the relation λ² = λ∘λ stays a testable
// statement rather than a definition. Both maps are cached as 28x28
// matrices acting on wedge coordinates.

#include "e8alg/matrix.hpp"
#include "e8alg/octonion.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace e8alg {

constexpr int kWedgeCount = 28;

/// Lexicographic index of the wedge e_i ∧ e_j, 0 <= i < j <= 7.
constexpr int wedge_index(int i, int j) {
    return i * 7 - i * (i - 1) / 2 + (j - i - 1);
}

constexpr std::pair<int, int> wedge_pair(int k) {
    for (int i = 0; i < 8; ++i) {
        const int row = 7 - i;
        if (k < row) return {i, i + 1 + k};
        k -= row;
    }
    throw std::out_of_range("wedge index out of range");
}

struct Skew8 {
    Mat8 m;

    Skew8() = default;

    /// Validates skew-symmetry; the entry point for raw matrices.
    explicit Skew8(Mat8 raw) : m(std::move(raw)) {
        if (!m.is_skew()) throw std::invalid_argument("matrix is not skew-symmetric");
    }

    /// Wraps without validating. For internal operations whose results
    /// are skew by construction; raw external input goes through the
    /// validating constructor.
    static Skew8 unchecked(Mat8 raw) {
        Skew8 s;
        s.m = std::move(raw);
        return s;
    }

    const Rational& operator()(int i, int j) const { return m.a[i][j]; }

    bool is_zero() const { return m.is_zero(); }

    friend bool operator==(const Skew8& x, const Skew8& y) { return x.m == y.m; }

    friend Skew8 operator+(const Skew8& x, const Skew8& y) { return unchecked(x.m + y.m); }
    friend Skew8 operator-(const Skew8& x, const Skew8& y) { return unchecked(x.m - y.m); }
    friend Skew8 operator-(const Skew8& x) { return unchecked(-x.m); }
    friend Skew8 operator*(const Rational& c, const Skew8& x) { return unchecked(c * x.m); }
};

/// x ∧ y = xyᵀ - yxᵀ.
inline Skew8 wedge(const Octonion& x, const Octonion& y) {
    return Skew8::unchecked(outer(x.c, y.c) - outer(y.c, x.c));
}

inline Skew8 commutator(const Skew8& x, const Skew8& y) {
    return Skew8::unchecked(commutator(x.m, y.m));
}

/// Matrix action of so(8) on Ca = R^8.
inline Octonion apply(const Skew8& a, const Octonion& x) {
    return Octonion(mat_vec(a.m, x.c));
}

inline Skew8 wedge_basis(int k) {
    const auto [i, j] = wedge_pair(k);
    return wedge(Octonion::unit(i), Octonion::unit(j));
}

/// Coordinates over {e_i ∧ e_j}_{i<j}: coefficient of e_i ∧ e_j is the
/// (i,j) entry.
inline std::array<Rational, kWedgeCount> wedge_coords(const Skew8& a) {
    std::array<Rational, kWedgeCount> c;
    for (int k = 0; k < kWedgeCount; ++k) {
        const auto [i, j] = wedge_pair(k);
        c[k] = a(i, j);
    }
    return c;
}

inline Skew8 from_wedge_coords(const std::array<Rational, kWedgeCount>& c) {
    Mat8 m;
    for (int k = 0; k < kWedgeCount; ++k) {
        const auto [i, j] = wedge_pair(k);
        m.a[i][j] = c[k];
        m.a[j][i] = -c[k];
    }
    return Skew8::unchecked(std::move(m));
}

namespace detail {

using WedgeMatrix = std::array<std::array<Rational, kWedgeCount>, kWedgeCount>;

// Column k holds the wedge coordinates of the image of e_i ∧ e_j.
inline WedgeMatrix wedge_matrix_from_images(const std::array<Skew8, kWedgeCount>& images) {
    WedgeMatrix m;
    for (int k = 0; k < kWedgeCount; ++k) {
        const auto col = wedge_coords(images[k]);
        for (int r = 0; r < kWedgeCount; ++r) m[r][k] = col[r];
    }
    return m;
}

inline Skew8 apply_wedge_matrix(const WedgeMatrix& m, const Skew8& a) {
    const auto c = wedge_coords(a);
    std::array<Rational, kWedgeCount> out{};
    for (int k = 0; k < kWedgeCount; ++k) {
        if (c[k].is_zero()) continue;
        for (int r = 0; r < kWedgeCount; ++r)
            if (!m[r][k].is_zero()) add_assign(out[r], m[r][k] * c[k]);
    }
    return from_wedge_coords(out);
}

inline const WedgeMatrix& lambda_matrix() {
    static const WedgeMatrix cached = [] {
        const Rational half(1, 2);
        std::array<Skew8, kWedgeCount> images;
        for (int k = 0; k < kWedgeCount; ++k) {
            const auto [i, j] = wedge_pair(k);
            if (i == 0) {
                // λ(e0 ∧ e_j) = -λ(e_j ∧ e0) = ½ L_{ē0} L_{e_j} = ½ L_{e_j}
                images[k] = Skew8::unchecked(half * left_mul_matrix(Octonion::unit(j)));
            } else {
                // λ(e_i ∧ e_j) = -½ L_{ē_j} L_{e_i} = ½ L_{e_j} L_{e_i}
                images[k] = Skew8::unchecked(half * (left_mul_matrix(Octonion::unit(j)) *
                                                     left_mul_matrix(Octonion::unit(i))));
            }
        }
        return wedge_matrix_from_images(images);
    }();
    return cached;
}

inline const WedgeMatrix& lambda2_matrix() {
    static const WedgeMatrix cached = [] {
        const Rational half(1, 2);
        std::array<Skew8, kWedgeCount> images;
        for (int k = 0; k < kWedgeCount; ++k) {
            const auto [i, j] = wedge_pair(k);
            if (i == 0) {
                images[k] = Skew8::unchecked(half * right_mul_matrix(Octonion::unit(j)));
            } else {
                images[k] = Skew8::unchecked(half * (right_mul_matrix(Octonion::unit(j)) *
                                                     right_mul_matrix(Octonion::unit(i))));
            }
        }
        return wedge_matrix_from_images(images);
    }();
    return cached;
}

} // namespace detail

inline Skew8 triality_lambda(const Skew8& a) {
    if (a.is_zero()) return a;
    return detail::apply_wedge_matrix(detail::lambda_matrix(), a);
}

inline Skew8 triality_lambda2(const Skew8& a) {
    if (a.is_zero()) return a;
    return detail::apply_wedge_matrix(detail::lambda2_matrix(), a);
}

/// κ(a ∧ b) = ā ∧ b̄; equivalently conjugation by Γ = diag(1,-1,...,-1).
inline Skew8 kappa(const Skew8& a) {
    Mat8 m = a.m;
    for (int j = 1; j < 8; ++j) {
        m.a[0][j] = -m.a[0][j];
        m.a[j][0] = -m.a[j][0];
    }
    return Skew8::unchecked(std::move(m));
}

} // namespace e8alg
