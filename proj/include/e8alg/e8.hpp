#pragma once

// The 248-dimensional algebra on (so(8)⊕so(8)) × (Ca ⊗ Ca)³: compact
// bracket, split-form bracket, the order-3 automorphism τ, the invariant
// scalar product, and the involution whose eigenspaces give the
// so(16) + 128 symmetric decomposition.
//
// Canonical basis order: 28 wedges of the first so(8), 28 of the second,
// then the u-, v-, w-copies of {e_i ⊗ e_j} in row-major order (64 each).

#include "e8alg/octoct.hpp"
#include "e8alg/so8.hpp"

#include <array>
#include <stdexcept>

namespace e8alg {

struct E8Element {
    SoPair a;
    OctOct u;
    OctOct v;
    OctOct w;

    bool is_zero() const {
        return a.is_zero() && u.is_zero() && v.is_zero() && w.is_zero();
    }

    friend bool operator==(const E8Element& x, const E8Element& y) {
        return x.a == y.a && x.u == y.u && x.v == y.v && x.w == y.w;
    }
    friend E8Element operator+(const E8Element& x, const E8Element& y) {
        return {x.a + y.a, x.u + y.u, x.v + y.v, x.w + y.w};
    }
    friend E8Element operator-(const E8Element& x, const E8Element& y) {
        return {x.a - y.a, x.u - y.u, x.v - y.v, x.w - y.w};
    }
    friend E8Element operator*(const Rational& c, const E8Element& x) {
        return {c * x.a, c * x.u, c * x.v, c * x.w};
    }
};

namespace e8 {

constexpr int kDim = 248;

inline E8Element basis_element(int k) {
    E8Element e;
    if (k < 28)
        e.a.p = wedge_basis(k);
    else if (k < 56)
        e.a.q = wedge_basis(k - 28);
    else if (k < 120)
        e.u = OctOct::unit((k - 56) / 8, (k - 56) % 8);
    else if (k < 184)
        e.v = OctOct::unit((k - 120) / 8, (k - 120) % 8);
    else if (k < 248)
        e.w = OctOct::unit((k - 184) / 8, (k - 184) % 8);
    else
        throw std::out_of_range("e8 basis index out of range");
    return e;
}

inline std::array<Rational, kDim> coords(const E8Element& x) {
    std::array<Rational, kDim> c;
    const auto pc = wedge_coords(x.a.p);
    const auto qc = wedge_coords(x.a.q);
    for (int k = 0; k < 28; ++k) {
        c[k] = pc[k];
        c[28 + k] = qc[k];
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            c[56 + 8 * i + j] = x.u.m.a[i][j];
            c[120 + 8 * i + j] = x.v.m.a[i][j];
            c[184 + 8 * i + j] = x.w.m.a[i][j];
        }
    return c;
}

inline E8Element from_coords(const std::array<Rational, kDim>& c) {
    E8Element x;
    std::array<Rational, kWedgeCount> pc, qc;
    for (int k = 0; k < 28; ++k) {
        pc[k] = c[k];
        qc[k] = c[28 + k];
    }
    x.a.p = from_wedge_coords(pc);
    x.a.q = from_wedge_coords(qc);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            x.u.m.a[i][j] = c[56 + 8 * i + j];
            x.v.m.a[i][j] = c[120 + 8 * i + j];
            x.w.m.a[i][j] = c[184 + 8 * i + j];
        }
    return x;
}

} // namespace e8

/// Compact-form bracket [(A,u,v,w),(B,x,y,z)] = (C,r,s,t) with
///   C = [A,B] - 4 u⋏x - 4 Λ²(v⋏y) - 4 Λ(w⋏z)
///   r = A.x - B.u + conj(v⊙z) - conj(y⊙w)
///   s = Λ(A).y - Λ(B).v + conj(w⊙x) - conj(z⊙u)
///   t = Λ²(A).z - Λ²(B).w + conj(u⊙y) - conj(x⊙v)
inline E8Element bracket(const E8Element& lhs, const E8Element& rhs) {
    const Rational four(4);
    const SoPair &A = lhs.a, &B = rhs.a;
    const OctOct &u = lhs.u, &v = lhs.v, &w = lhs.w;
    const OctOct &x = rhs.u, &y = rhs.v, &z = rhs.w;
    const SoPair lA = triality_lambda(A), lB = triality_lambda(B);
    const SoPair l2A = triality_lambda2(A), l2B = triality_lambda2(B);

    E8Element out;
    out.a = commutator(A, B) - four * curly_wedge(u, x) -
            four * triality_lambda2(curly_wedge(v, y)) -
            four * triality_lambda(curly_wedge(w, z));
    out.u = act(A, x) - act(B, u) + oo_conj(oo_mul(v, z)) - oo_conj(oo_mul(y, w));
    out.v = act(lA, y) - act(lB, v) + oo_conj(oo_mul(w, x)) - oo_conj(oo_mul(z, u));
    out.w = act(l2A, z) - act(l2B, w) + oo_conj(oo_mul(u, y)) - oo_conj(oo_mul(x, v));
    return out;
}

/// Split-form bracket: relative to the compact bracket the signs flip on
/// the [p,p] components (p = v,w part), i.e.
///   C* = [A,B] - 4 u⋏x + 4 Λ²(v⋏y) + 4 Λ(w⋏z)
///   r* = A.x - B.u - conj(v⊙z) + conj(y⊙w)
/// with s and t unchanged.
inline E8Element split_bracket(const E8Element& lhs, const E8Element& rhs) {
    const Rational four(4);
    const SoPair &A = lhs.a, &B = rhs.a;
    const OctOct &u = lhs.u, &v = lhs.v, &w = lhs.w;
    const OctOct &x = rhs.u, &y = rhs.v, &z = rhs.w;
    const SoPair lA = triality_lambda(A), lB = triality_lambda(B);
    const SoPair l2A = triality_lambda2(A), l2B = triality_lambda2(B);

    E8Element out;
    out.a = commutator(A, B) - four * curly_wedge(u, x) +
            four * triality_lambda2(curly_wedge(v, y)) +
            four * triality_lambda(curly_wedge(w, z));
    out.u = act(A, x) - act(B, u) - oo_conj(oo_mul(v, z)) + oo_conj(oo_mul(y, w));
    out.v = act(lA, y) - act(lB, v) + oo_conj(oo_mul(w, x)) - oo_conj(oo_mul(z, u));
    out.w = act(l2A, z) - act(l2B, w) + oo_conj(oo_mul(u, y)) - oo_conj(oo_mul(x, v));
    return out;
}

/// τ(A,x,y,z) = (Λ(A),y,z,x); order-3 automorphism of both brackets.
inline E8Element tau(const E8Element& x) {
    return {triality_lambda(x.a), x.v, x.w, x.u};
}

/// <((A,B),u,v,w),((C,D),x,y,z)> = 8 tr(uxᵀ+vyᵀ+wzᵀ) - tr(AC) - tr(BD).
/// Positive definite and diagonal on the canonical basis.
inline Rational scalar_product(const E8Element& lhs, const E8Element& rhs) {
    // -tr(AC) = Frobenius(A, C) for skew A, C.
    return 8 * (frobenius(lhs.u.m, rhs.u.m) + frobenius(lhs.v.m, rhs.v.m) +
                frobenius(lhs.w.m, rhs.w.m)) +
           frobenius(lhs.a.p.m, rhs.a.p.m) + frobenius(lhs.a.q.m, rhs.a.q.m);
}

/// (A,u,v,w) -> (A,u,-v,-w): involutive automorphism of the compact
/// bracket; +1 eigenspace so(16) (dim 120), -1 eigenspace dim 128.
inline E8Element cartan_involution(const E8Element& x) {
    return {x.a, x.u, -x.v, -x.w};
}

} // namespace e8alg
