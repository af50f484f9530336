#pragma once

// The compact Lie algebra f4 on so(8) × Ca³, the 52-dimensional warm-up
// for the e8 bracket. Canonical basis order: 28 wedges (lexicographic),
// then the u-, v- and w-copies of e0..e7.

#include "e8alg/octonion.hpp"
#include "e8alg/so8.hpp"

#include <array>
#include <stdexcept>

namespace e8alg {

struct F4Element {
    Skew8 a;
    Octonion u;
    Octonion v;
    Octonion w;

    bool is_zero() const {
        return a.is_zero() && u.is_zero() && v.is_zero() && w.is_zero();
    }

    friend bool operator==(const F4Element& x, const F4Element& y) {
        return x.a == y.a && x.u == y.u && x.v == y.v && x.w == y.w;
    }
    friend F4Element operator+(const F4Element& x, const F4Element& y) {
        return {x.a + y.a, x.u + y.u, x.v + y.v, x.w + y.w};
    }
    friend F4Element operator-(const F4Element& x, const F4Element& y) {
        return {x.a - y.a, x.u - y.u, x.v - y.v, x.w - y.w};
    }
    friend F4Element operator*(const Rational& c, const F4Element& x) {
        return {c * x.a, c * x.u, c * x.v, c * x.w};
    }
};

namespace f4 {

constexpr int kDim = 52;

inline F4Element basis_element(int k) {
    F4Element e;
    if (k < 28)
        e.a = wedge_basis(k);
    else if (k < 36)
        e.u = Octonion::unit(k - 28);
    else if (k < 44)
        e.v = Octonion::unit(k - 36);
    else if (k < 52)
        e.w = Octonion::unit(k - 44);
    else
        throw std::out_of_range("f4 basis index out of range");
    return e;
}

inline std::array<Rational, kDim> coords(const F4Element& x) {
    std::array<Rational, kDim> c;
    const auto wc = wedge_coords(x.a);
    for (int k = 0; k < 28; ++k) c[k] = wc[k];
    for (int i = 0; i < 8; ++i) {
        c[28 + i] = x.u.c[i];
        c[36 + i] = x.v.c[i];
        c[44 + i] = x.w.c[i];
    }
    return c;
}

inline F4Element from_coords(const std::array<Rational, kDim>& c) {
    F4Element x;
    std::array<Rational, kWedgeCount> wc;
    for (int k = 0; k < 28; ++k) wc[k] = c[k];
    x.a = from_wedge_coords(wc);
    for (int i = 0; i < 8; ++i) {
        x.u.c[i] = c[28 + i];
        x.v.c[i] = c[36 + i];
        x.w.c[i] = c[44 + i];
    }
    return x;
}

} // namespace f4

/// [(A,u,v,w),(B,x,y,z)] = (C,r,s,t) with
///   C = AB - BA - 4 u∧x - 4 λ²(v∧y) - 4 λ(w∧z)
///   r = Ax - Bu + conj(vz) - conj(yw)
///   s = λ(A)y - λ(B)v + conj(wx) - conj(zu)
///   t = λ²(A)z - λ²(B)w + conj(uy) - conj(xv)
inline F4Element bracket(const F4Element& lhs, const F4Element& rhs) {
    const Rational four(4);
    const Skew8 &A = lhs.a, &B = rhs.a;
    const Octonion &u = lhs.u, &v = lhs.v, &w = lhs.w;
    const Octonion &x = rhs.u, &y = rhs.v, &z = rhs.w;

    F4Element out;
    out.a = commutator(A, B) - four * wedge(u, x) -
            four * triality_lambda2(wedge(v, y)) - four * triality_lambda(wedge(w, z));
    out.u = apply(A, x) - apply(B, u) + conj(v * z) - conj(y * w);
    out.v = apply(triality_lambda(A), y) - apply(triality_lambda(B), v) +
            conj(w * x) - conj(z * u);
    out.w = apply(triality_lambda2(A), z) - apply(triality_lambda2(B), w) +
            conj(u * y) - conj(x * v);
    return out;
}

/// τ(A,u,v,w) = (λ(A), v, w, u); an order-3 bracket automorphism.
inline F4Element tau(const F4Element& x) {
    return {triality_lambda(x.a), x.v, x.w, x.u};
}

} // namespace e8alg
