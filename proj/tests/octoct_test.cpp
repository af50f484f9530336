#include "e8alg/octoct.hpp"
#include "e8alg/structure_table.hpp"

#include <gtest/gtest.h>

#include <cstdint>

namespace e8alg {
namespace {

Octonion ou(int i) { return Octonion::unit(i); }

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    Rational rational() {
        return Rational(static_cast<std::int64_t>(next() % 17) - 8, std::int64_t{1} << (next() % 3));
    }
    Octonion octonion() {
        Octonion o;
        for (int i = 0; i < 8; ++i) o.c[i] = rational();
        return o;
    }
    OctOct octoct() {
        Mat8 m;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m.a[i][j] = rational();
        return OctOct(std::move(m));
    }
    Skew8 skew() {
        Mat8 m;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                m.a[i][j] = rational();
                m.a[j][i] = -m.a[i][j];
            }
        return Skew8(std::move(m));
    }
};

TEST(OctOctMul, BasisExamples) {
    // (e1⊗e2)⊙(e2⊗e4) = (e1e2)⊗(e2e4) = e3⊗e6
    EXPECT_EQ(oo_mul(OctOct::unit(1, 2), OctOct::unit(2, 4)), OctOct::unit(3, 6));
    // e0⊗e0 is the ⊙-identity
    Rng rng{77};
    for (int n = 0; n < 5; ++n) {
        const OctOct x = rng.octoct();
        EXPECT_EQ(oo_mul(OctOct::unit(0, 0), x), x);
        EXPECT_EQ(oo_mul(x, OctOct::unit(0, 0)), x);
    }
}

TEST(OctOctMul, RankOneClosedForm) {
    // (a⊗b)⊙(c⊗d) = (ac)⊗(bd), via the octonion module as oracle
    Rng rng{2001};
    for (int n = 0; n < 100; ++n) {
        const Octonion a = rng.octonion(), b = rng.octonion();
        const Octonion c = rng.octonion(), d = rng.octonion();
        EXPECT_EQ(oo_mul(OctOct::tensor(a, b), OctOct::tensor(c, d)), OctOct::tensor(a * c, b * d));
    }
}

TEST(OctOctConj, ExamplesAndInvolution) {
    EXPECT_EQ(oo_conj(OctOct::unit(0, 0)), OctOct::unit(0, 0));
    EXPECT_EQ(oo_conj(OctOct::unit(0, 3)), -OctOct::unit(0, 3));
    EXPECT_EQ(oo_conj(OctOct::unit(2, 5)), OctOct::unit(2, 5));
    Rng rng{31};
    for (int n = 0; n < 10; ++n) {
        const OctOct x = rng.octoct();
        EXPECT_EQ(oo_conj(oo_conj(x)), x);
        // matches conjugation of the tensor factors
        const Octonion a = rng.octonion(), b = rng.octonion();
        EXPECT_EQ(oo_conj(OctOct::tensor(a, b)), OctOct::tensor(conj(a), conj(b)));
    }
}

TEST(OctOctConj, AntiAutomorphismExhaustiveOnBasis) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                for (int l = 0; l < 8; ++l) {
                    const OctOct x = OctOct::unit(i, j), y = OctOct::unit(k, l);
                    EXPECT_EQ(oo_conj(oo_mul(x, y)), oo_mul(oo_conj(y), oo_conj(x)));
                }
}

TEST(SoPairAction, Examples) {
    Rng rng{63};
    EXPECT_TRUE(act(SoPair{}, rng.octoct()).is_zero());
    // (e0∧e1)e0 = -e1, so acting on e0⊗e0 gives -(e1⊗e0); acting twice
    // gives -(e0⊗e0).
    const SoPair h{wedge(ou(0), ou(1)), Skew8{}};
    const OctOct once = act(h, OctOct::unit(0, 0));
    EXPECT_EQ(once, -OctOct::unit(1, 0));
    EXPECT_EQ(act(h, once), -OctOct::unit(0, 0));
}

TEST(SoPairAction, RankOneForm) {
    // (P,Q).(r⊗s) = (Pr)⊗s + r⊗(Qs)
    Rng rng{99};
    for (int n = 0; n < 20; ++n) {
        const SoPair a{rng.skew(), rng.skew()};
        const Octonion r = rng.octonion(), s = rng.octonion();
        EXPECT_EQ(act(a, OctOct::tensor(r, s)),
                  OctOct::tensor(apply(a.p, r), s) + OctOct::tensor(r, apply(a.q, s)));
    }
}

TEST(SoPairAction, IsARepresentation) {
    Rng rng{12};
    for (int n = 0; n < 10; ++n) {
        const SoPair a{rng.skew(), rng.skew()};
        const SoPair b{rng.skew(), rng.skew()};
        const OctOct x = rng.octoct();
        EXPECT_EQ(act(commutator(a, b), x), act(a, act(b, x)) - act(b, act(a, x)));
    }
}

TEST(CurlyWedge, Examples) {
    // (e0⊗e0) ⋏ (e1⊗e0) = (e0∧e1, 0)
    const SoPair w = curly_wedge(OctOct::unit(0, 0), OctOct::unit(1, 0));
    EXPECT_EQ(w.p, wedge(ou(0), ou(1)));
    EXPECT_TRUE(w.q.is_zero());

    Rng rng{8181};
    const OctOct x = rng.octoct();
    EXPECT_TRUE(curly_wedge(x, x).is_zero());
}

TEST(CurlyWedge, RankOneFormulaExhaustive) {
    // (p⊗q) ⋏ (r⊗s) = (<q,s> p∧r, <p,r> q∧s) on all basis pairs
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q)
            for (int r = 0; r < 8; ++r)
                for (int s = 0; s < 8; ++s) {
                    const SoPair cw = curly_wedge(OctOct::unit(p, q), OctOct::unit(r, s));
                    const SoPair expect{inner(ou(q), ou(s)) * wedge(ou(p), ou(r)),
                                        inner(ou(p), ou(r)) * wedge(ou(q), ou(s))};
                    EXPECT_EQ(cw, expect);
                    EXPECT_TRUE(cw.p.m.is_skew());
                    EXPECT_TRUE(cw.q.m.is_skew());
                }
}

TEST(CurlyWedge, RankOneFormulaRandom) {
    Rng rng{5555};
    for (int n = 0; n < 50; ++n) {
        const Octonion p = rng.octonion(), q = rng.octonion();
        const Octonion r = rng.octonion(), s = rng.octonion();
        const SoPair cw = curly_wedge(OctOct::tensor(p, q), OctOct::tensor(r, s));
        EXPECT_EQ(cw.p, inner(q, s) * wedge(p, r));
        EXPECT_EQ(cw.q, inner(p, r) * wedge(q, s));
    }
}

TEST(PairTriality, ComponentwiseAndOrderThree) {
    EXPECT_TRUE(triality_lambda(SoPair{}).is_zero());
    // componentwise images; sign fixed by the triality identity
    const SoPair img = triality_lambda(SoPair{wedge(ou(1), ou(0)), Skew8{}});
    EXPECT_EQ(img.p, Skew8(-(Rational(1, 2) * left_mul_matrix(ou(1)))));
    EXPECT_TRUE(img.q.is_zero());

    for (int k = 0; k < 56; ++k) {
        SoPair a;
        if (k < 28)
            a.p = wedge_basis(k);
        else
            a.q = wedge_basis(k - 28);
        EXPECT_EQ(triality_lambda(triality_lambda(triality_lambda(a))), a) << k;
        EXPECT_EQ(triality_lambda2(a), triality_lambda(triality_lambda(a))) << k;
    }
}

TEST(So16Embed, BlocksAndLinearity) {
    EXPECT_TRUE(so16_embed(SoPair{}, OctOct{}).is_zero());
    Rng rng{404};
    const SoPair a{rng.skew(), rng.skew()};
    const Mat16 blockdiag = so16_embed(a, OctOct{});
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            EXPECT_EQ(blockdiag.a[i][j], a.p.m.a[i][j]);
            EXPECT_EQ(blockdiag.a[8 + i][8 + j], a.q.m.a[i][j]);
            EXPECT_EQ(blockdiag.a[i][8 + j], Rational(0));
        }
    const OctOct x = rng.octoct();
    const Mat16 e = so16_embed(a, x);
    EXPECT_TRUE(e.is_skew());
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) EXPECT_EQ(e.a[i][8 + j], 2 * x.m.a[i][j]);
}

TEST(So16Embed, BracketMapsToCommutatorExhaustive) {
    // Lemma-1 model bracket matches 16x16 matrix commutators on all
    // 120x120 basis pairs.
    std::vector<So16Element> basis;
    std::vector<Mat16> embedded;
    for (int k = 0; k < so16::kDim; ++k) {
        basis.push_back(so16::basis_element(k));
        embedded.push_back(so16_embed(basis.back().a, basis.back().x));
    }
    for (int i = 0; i < so16::kDim; ++i)
        for (int j = 0; j < so16::kDim; ++j) {
            const So16Element b = bracket(basis[i], basis[j]);
            EXPECT_EQ(so16_embed(b.a, b.x), commutator(embedded[i], embedded[j]))
                << i << "," << j;
        }
}

} // namespace
} // namespace e8alg
