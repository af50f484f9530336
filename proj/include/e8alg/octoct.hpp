#pragma once

// The oct-octonions Ca ⊗ Ca realized as 8x8 rational matrices through
// x ⊗ y = xyᵀ (so e_i ⊗ e_j is the matrix unit E_ij), together with the
// so(8)⊕so(8) action, the curly wedge, componentwise triality, and the
// so(16) block model of Lemma-1 type.
//
// Two different products live on this space: the oct-octonion product ⊙
// and the ordinary matrix product. Only ⊙ is part of the OctOct surface
// (oo_mul); code that needs matrix products (the action, the curly
// wedge) reaches into the raw MatR<8> layer explicitly, so the two can
// never be confused at a call site.

#include "e8alg/matrix.hpp"
#include "e8alg/octonion.hpp"
#include "e8alg/so8.hpp"

#include <utility>

namespace e8alg {

struct OctOct {
    Mat8 m; // raw matrix layer; not an ⊙-aware object

    OctOct() = default;
    explicit OctOct(Mat8 raw) : m(std::move(raw)) {}

    /// e_i ⊗ e_j, i.e. the matrix unit E_ij.
    static OctOct unit(int i, int j) {
        OctOct x;
        x.m.a[i][j] = 1;
        return x;
    }

    /// Pure tensor x ⊗ y = xyᵀ.
    static OctOct tensor(const Octonion& x, const Octonion& y) {
        return OctOct(outer(x.c, y.c));
    }

    const Rational& operator()(int i, int j) const { return m.a[i][j]; }

    bool is_zero() const { return m.is_zero(); }

    friend bool operator==(const OctOct& x, const OctOct& y) { return x.m == y.m; }
    friend OctOct operator+(const OctOct& x, const OctOct& y) { return OctOct(x.m + y.m); }
    friend OctOct operator-(const OctOct& x, const OctOct& y) { return OctOct(x.m - y.m); }
    friend OctOct operator-(const OctOct& x) { return OctOct(-x.m); }
    friend OctOct operator*(const Rational& c, const OctOct& x) { return OctOct(c * x.m); }
};

/// Oct-octonion product, (a ⊗ b) ⊙ (c ⊗ d) = ac ⊗ bd extended
/// bilinearly. The structure tensor on the basis {e_i ⊗ e_j} is a pair
/// of octonion-table lookups.
inline OctOct oo_mul(const OctOct& x, const OctOct& y) {
    const OctTable& t = oct_table();
    OctOct r;
    if (x.is_zero() || y.is_zero()) return r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (x.m.a[i][j].is_zero()) continue;
            for (int k = 0; k < 8; ++k)
                for (int l = 0; l < 8; ++l) {
                    if (y.m.a[k][l].is_zero()) continue;
                    const Rational p = x.m.a[i][j] * y.m.a[k][l];
                    if (t.sgn[i][k] * t.sgn[j][l] > 0)
                        add_assign(r.m.a[t.idx[i][k]][t.idx[j][l]], p);
                    else
                        sub_assign(r.m.a[t.idx[i][k]][t.idx[j][l]], p);
                }
        }
    return r;
}

/// Conjugation ā ⊗ b̄, i.e. Γ X Γ with Γ = diag(1,-1,...,-1).
inline OctOct oo_conj(const OctOct& x) {
    Mat8 m = x.m;
    for (int j = 1; j < 8; ++j) {
        m.a[0][j] = -m.a[0][j];
        m.a[j][0] = -m.a[j][0];
    }
    return OctOct(std::move(m));
}

struct SoPair {
    Skew8 p;
    Skew8 q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }

    friend bool operator==(const SoPair& x, const SoPair& y) {
        return x.p == y.p && x.q == y.q;
    }
    friend SoPair operator+(const SoPair& x, const SoPair& y) {
        return {x.p + y.p, x.q + y.q};
    }
    friend SoPair operator-(const SoPair& x, const SoPair& y) {
        return {x.p - y.p, x.q - y.q};
    }
    friend SoPair operator-(const SoPair& x) { return {-x.p, -x.q}; }
    friend SoPair operator*(const Rational& c, const SoPair& x) {
        return {c * x.p, c * x.q};
    }
};

/// Direct-sum bracket on so(8) ⊕ so(8).
inline SoPair commutator(const SoPair& x, const SoPair& y) {
    return {commutator(x.p, y.p), commutator(x.q, y.q)};
}

/// (P,Q).X = PX - XQ; on pure tensors (P,Q).(r ⊗ s) = Pr ⊗ s + r ⊗ Qs.
inline OctOct act(const SoPair& a, const OctOct& x) {
    if (x.is_zero() || a.is_zero()) return OctOct();
    return OctOct(a.p.m * x.m - x.m * a.q.m);
}

/// X ⋏ Y = (XYᵀ - YXᵀ, XᵀY - YᵀX); both components skew.
inline SoPair curly_wedge(const OctOct& x, const OctOct& y) {
    if (x.is_zero() || y.is_zero()) return SoPair{};
    const Mat8 xt = x.m.transposed();
    const Mat8 yt = y.m.transposed();
    return {Skew8::unchecked(x.m * yt - y.m * xt), Skew8::unchecked(xt * y.m - yt * x.m)};
}

/// Componentwise triality Λ(P,Q) = (λ(P), λ(Q)), of order three.
inline SoPair triality_lambda(const SoPair& a) {
    return {triality_lambda(a.p), triality_lambda(a.q)};
}

inline SoPair triality_lambda2(const SoPair& a) {
    return {triality_lambda2(a.p), triality_lambda2(a.q)};
}

/// Block embedding ((P,Q),X) -> [[P, 2X], [-2Xᵀ, Q]] into so(16).
inline Mat16 so16_embed(const SoPair& a, const OctOct& x) {
    Mat16 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            r.a[i][j] = a.p.m.a[i][j];
            r.a[8 + i][8 + j] = a.q.m.a[i][j];
            r.a[i][8 + j] = 2 * x.m.a[i][j];
            r.a[8 + j][i] = -2 * x.m.a[i][j];
        }
    return r;
}

/// Element of the so(16) model (so(8)⊕so(8)) × (Ca ⊗ Ca).
struct So16Element {
    SoPair a;
    OctOct x;

    friend bool operator==(const So16Element& l, const So16Element& r) {
        return l.a == r.a && l.x == r.x;
    }
};

/// [(A,X),(B,Y)] = (AB - BA - 4 X ⋏ Y, A.Y - B.X).
inline So16Element bracket(const So16Element& l, const So16Element& r) {
    const Rational four(4);
    return {commutator(l.a, r.a) - four * curly_wedge(l.x, r.x),
            OctOct(act(l.a, r.x) - act(r.a, l.x))};
}

} // namespace e8alg
