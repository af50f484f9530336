#pragma once

// Exact octonion (Cayley number) arithmetic over the ordered basis
// e0..e7, with e0 the multiplicative identity.
//
// The full sign/index multiplication table is generated at compile time
// from the seven generating relations
//
//   e1e2=e3, e1e4=e5, e2e4=e6, e3e4=e7, e5e3=e6, e6e1=e7, e7e2=e5
//
// closed under anticommutativity of distinct imaginary units and the
// consequences of the alternative laws (xx)y = x(xy), (xy)y = x(yy):
// from a*b = c one derives c*b = -a and a*c = -b. The generator fails
// the build if any basis product would be assigned twice or stays
// unassigned, and the alternative laws are re-checked on all basis pairs
// by static_assert below.

#include "e8alg/matrix.hpp"
#include "e8alg/rational.hpp"

#include <array>
#include <cstdint>

namespace e8alg {

struct OctTable {
    // e_i * e_j = sgn[i][j] * e_{idx[i][j]}
    std::array<std::array<std::int8_t, 8>, 8> idx{};
    std::array<std::array<std::int8_t, 8>, 8> sgn{};
};

namespace detail {

constexpr OctTable build_oct_table() {
    OctTable t{};
    for (auto& row : t.idx)
        for (auto& v : row) v = -1;

    const auto set = [&t](int i, int j, int k, int s) {
        if (t.idx[i][j] != -1) throw "octonion table cell assigned twice";
        t.idx[i][j] = static_cast<std::int8_t>(k);
        t.sgn[i][j] = static_cast<std::int8_t>(s);
    };

    for (int i = 0; i < 8; ++i) {
        set(0, i, i, 1);
        if (i != 0) set(i, 0, i, 1);
    }
    for (int i = 1; i < 8; ++i) set(i, i, 0, -1);

    // The seven relations e_a e_b = e_c.
    constexpr int relations[7][3] = {
        {1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {5, 3, 6}, {6, 1, 7}, {7, 2, 5},
    };
    for (const auto& r : relations) {
        const int a = r[0], b = r[1], c = r[2];
        set(a, b, c, 1);
        set(b, a, c, -1);           // anticommutativity
        set(c, b, a, -1);           // (ab)b = a(bb) = -a
        set(b, c, a, 1);
        set(a, c, b, -1);           // a(ab) = (aa)b = -b
        set(c, a, b, 1);
    }

    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (t.idx[i][j] == -1) throw "octonion table incomplete";
    return t;
}

constexpr OctTable kOctTable = build_oct_table();

// Alternative laws on basis pairs, checked on the raw sign/index table.
constexpr bool oct_table_alternative() {
    const auto& t = kOctTable;
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            // (xx)y == x(xy)
            {
                const int xx = t.idx[x][x], s1 = t.sgn[x][x];
                const int xy = t.idx[x][y], s2 = t.sgn[x][y];
                if (t.idx[xx][y] != t.idx[x][xy]) return false;
                if (s1 * t.sgn[xx][y] != s2 * t.sgn[x][xy]) return false;
            }
            // (xy)y == x(yy)
            {
                const int xy = t.idx[x][y], s1 = t.sgn[x][y];
                const int yy = t.idx[y][y], s2 = t.sgn[y][y];
                if (t.idx[xy][y] != t.idx[x][yy]) return false;
                if (s1 * t.sgn[xy][y] != s2 * t.sgn[x][yy]) return false;
            }
        }
    return true;
}

static_assert(oct_table_alternative(),
              "generated octonion table violates the alternative laws");

} // namespace detail

inline const OctTable& oct_table() { return detail::kOctTable; }

struct Octonion {
    Vec8 c{};

    Octonion() = default;
    explicit Octonion(Vec8 coeffs) : c(std::move(coeffs)) {}

    /// Basis unit e_i.
    static Octonion unit(int i) {
        Octonion o;
        o.c[static_cast<std::size_t>(i)] = 1;
        return o;
    }

    static Octonion scalar(const Rational& r) {
        Octonion o;
        o.c[0] = r;
        return o;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Octonion& x, const Octonion& y) { return x.c == y.c; }

    friend Octonion operator+(const Octonion& x, const Octonion& y) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = sum(x.c[i], y.c[i]);
        return r;
    }

    friend Octonion operator-(const Octonion& x, const Octonion& y) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = difference(x.c[i], y.c[i]);
        return r;
    }

    friend Octonion operator-(const Octonion& x) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = -x.c[i];
        return r;
    }

    friend Octonion operator*(const Rational& s, const Octonion& x) {
        Octonion r;
        if (s.is_zero()) return r;
        for (int i = 0; i < 8; ++i)
            if (!x.c[i].is_zero()) r.c[i] = s * x.c[i];
        return r;
    }

    // Bilinear extension of the basis table.
    friend Octonion operator*(const Octonion& x, const Octonion& y) {
        const OctTable& t = oct_table();
        Octonion r;
        for (int i = 0; i < 8; ++i) {
            if (x.c[i].is_zero()) continue;
            for (int j = 0; j < 8; ++j) {
                if (y.c[j].is_zero()) continue;
                const Rational p = x.c[i] * y.c[j];
                if (t.sgn[i][j] > 0)
                    add_assign(r.c[t.idx[i][j]], p);
                else
                    sub_assign(r.c[t.idx[i][j]], p);
            }
        }
        return r;
    }
};

/// Octonionic conjugation: fixes e0, negates e1..e7.
inline Octonion conj(const Octonion& x) {
    Octonion r;
    r.c[0] = x.c[0];
    for (int i = 1; i < 8; ++i) r.c[i] = -x.c[i];
    return r;
}

inline Rational real_part(const Octonion& x) { return x.c[0]; }

inline Octonion pure_part(const Octonion& x) {
    Octonion r = x;
    r.c[0] = 0;
    return r;
}

/// <u,v> = Re(u v̄), which equals the coordinate dot product.
inline Rational inner(const Octonion& u, const Octonion& v) {
    Rational s = 0;
    for (int i = 0; i < 8; ++i)
        if (!u.c[i].is_zero() && !v.c[i].is_zero()) add_assign(s, u.c[i] * v.c[i]);
    return s;
}

inline Rational norm_sq(const Octonion& x) { return inner(x, x); }

/// Matrix of x -> a*x in the e-basis.
inline Mat8 left_mul_matrix(const Octonion& a) {
    const OctTable& t = oct_table();
    Mat8 m;
    for (int i = 0; i < 8; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (t.sgn[i][j] > 0)
                add_assign(m.a[t.idx[i][j]][j], a.c[i]);
            else
                sub_assign(m.a[t.idx[i][j]][j], a.c[i]);
        }
    }
    return m;
}

/// Matrix of x -> x*a in the e-basis.
inline Mat8 right_mul_matrix(const Octonion& a) {
    const OctTable& t = oct_table();
    Mat8 m;
    for (int i = 0; i < 8; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (t.sgn[j][i] > 0)
                add_assign(m.a[t.idx[j][i]][j], a.c[i]);
            else
                sub_assign(m.a[t.idx[j][i]][j], a.c[i]);
        }
    }
    return m;
}

} // namespace e8alg
