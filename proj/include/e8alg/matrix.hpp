#pragma once

// Small fixed-size rational matrices. This is the raw-matrix layer: the
// algebra types (Skew8, OctOct) wrap MatR<8> and decide which operations
// they expose on top of it.

#include "e8alg/rational.hpp"

#include <array>
#include <cstddef>

namespace e8alg {

using Vec8 = std::array<Rational, 8>;

template <std::size_t N>
struct MatR {
    std::array<std::array<Rational, N>, N> a{};

    Rational& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

    static MatR zero() { return MatR{}; }

    static MatR identity() {
        MatR m;
        for (std::size_t i = 0; i < N; ++i) m.a[i][i] = 1;
        return m;
    }

    bool is_zero() const {
        for (const auto& row : a)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const MatR& x, const MatR& y) { return x.a == y.a; }

    friend MatR operator+(const MatR& x, const MatR& y) {
        if (y.is_zero()) return x;
        if (x.is_zero()) return y;
        MatR r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.a[i][j] = sum(x.a[i][j], y.a[i][j]);
        return r;
    }

    friend MatR operator-(const MatR& x, const MatR& y) {
        if (y.is_zero()) return x;
        if (x.is_zero()) return -y;
        MatR r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.a[i][j] = difference(x.a[i][j], y.a[i][j]);
        return r;
    }

    friend MatR operator-(const MatR& x) {
        MatR r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.a[i][j] = -x.a[i][j];
        return r;
    }

    friend MatR operator*(const Rational& c, const MatR& x) {
        MatR r;
        if (c.is_zero()) return r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (!x.a[i][j].is_zero()) r.a[i][j] = c * x.a[i][j];
        return r;
    }

    // Matrix product. Skips zero entries; basis elements are almost all
    // zeros, which is what makes the exhaustive sweeps affordable.
    friend MatR operator*(const MatR& x, const MatR& y) {
        MatR r;
        if (x.is_zero() || y.is_zero()) return r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const Rational& xik = x.a[i][k];
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < N; ++j)
                    if (!y.a[k][j].is_zero()) add_assign(r.a[i][j], xik * y.a[k][j]);
            }
        return r;
    }

    MatR transposed() const {
        MatR r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.a[i][j] = a[j][i];
        return r;
    }

    Rational trace() const {
        Rational t = 0;
        for (std::size_t i = 0; i < N; ++i) t += a[i][i];
        return t;
    }

    bool is_skew() const {
        for (std::size_t i = 0; i < N; ++i) {
            if (!a[i][i].is_zero()) return false;
            for (std::size_t j = i + 1; j < N; ++j) {
                if (a[i][j].is_zero()) {
                    if (!a[j][i].is_zero()) return false;
                } else if (a[i][j] != -a[j][i]) {
                    return false;
                }
            }
        }
        return true;
    }
};

using Mat8 = MatR<8>;
using Mat16 = MatR<16>;

template <std::size_t N>
MatR<N> commutator(const MatR<N>& x, const MatR<N>& y) {
    return x * y - y * x;
}

/// Sum of entrywise products tr(x yᵀ); the standard inner product on R(N).
template <std::size_t N>
Rational frobenius(const MatR<N>& x, const MatR<N>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (!x.a[i][j].is_zero() && !y.a[i][j].is_zero()) add_assign(s, x.a[i][j] * y.a[i][j]);
    return s;
}

inline Vec8 mat_vec(const Mat8& m, const Vec8& v) {
    Vec8 r{};
    for (std::size_t j = 0; j < 8; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < 8; ++i)
            if (!m.a[i][j].is_zero()) add_assign(r[i], m.a[i][j] * v[j]);
    }
    return r;
}

inline Mat8 outer(const Vec8& x, const Vec8& y) {
    Mat8 r;
    for (std::size_t i = 0; i < 8; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < 8; ++j)
            if (!y[j].is_zero()) r.a[i][j] = x[i] * y[j];
    }
    return r;
}

} // namespace e8alg
