#include "e8alg/structure_table.hpp"
#include "e8alg/export_io.hpp"
#include "e8alg/sampling.hpp"
#include "e8alg/verify.hpp"

#include <gtest/gtest.h>

#include <set>

namespace e8alg {
namespace {

const StructureTable& e8_table() {
    static const StructureTable t = build_structure_table(AlgebraId::e8);
    return t;
}

TEST(StructureTable, Dimensions) {
    EXPECT_EQ(build_structure_table(AlgebraId::f4).dim, 52);
    EXPECT_EQ(e8_table().dim, 248);
    EXPECT_EQ(build_structure_table(AlgebraId::so16).dim, 120);
    EXPECT_EQ(algebra_dim(AlgebraId::e8_split), 248);
}

TEST(StructureTable, EntriesSortedAndCanonical) {
    const StructureTable& t = e8_table();
    for (std::size_t n = 0; n < t.entries.size(); ++n) {
        const auto& e = t.entries[n];
        EXPECT_LT(e.i, e.j);
        EXPECT_FALSE(e.c.is_zero());
        if (n) {
            const auto& p = t.entries[n - 1];
            EXPECT_TRUE(std::tie(p.i, p.j, p.k) < std::tie(e.i, e.j, e.k));
        }
    }
}

TEST(StructureTable, EntriesMatchDirectBracket) {
    const StructureTable& t = e8_table();
    const TableRows rows(t);
    // spot indices across all five blocks
    const int idx[] = {0, 30, 60, 125, 200, 247};
    for (const int i : idx)
        for (const int j : idx) {
            if (i == j) continue;
            const auto direct =
                e8::coords(bracket(e8::basis_element(i), e8::basis_element(j)));
            std::vector<Rational> via_table(248);
            for (const auto& [k, c] : rows(i, j)) via_table[k] = c;
            for (int k = 0; k < 248; ++k) EXPECT_EQ(via_table[k], direct[k]);
        }
}

TEST(StructureTable, DistinctMagnitudesAreSmallDyadics) {
    // regression fixture computed from the built table
    std::set<std::string> mags;
    for (const auto& e : e8_table().entries) mags.insert(to_string(abs(e.c)));
    const std::set<std::string> expected = {"1/2", "1", "2", "4"};
    EXPECT_EQ(mags, expected);
}

TEST(StructureTable, DeterministicBuild) {
    const StructureTable a = build_structure_table(AlgebraId::f4);
    const StructureTable b = build_structure_table(AlgebraId::f4);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t n = 0; n < a.entries.size(); ++n) EXPECT_EQ(a.entries[n], b.entries[n]);
    EXPECT_EQ(a.basis_labels, b.basis_labels);
}

TEST(StructureTable, Labels) {
    const StructureTable& t = e8_table();
    EXPECT_EQ(t.basis_labels[0], "so8a:e0^e1");
    EXPECT_EQ(t.basis_labels[28], "so8b:e0^e1");
    EXPECT_EQ(t.basis_labels[56 + 8 * 3 + 5], "u:e3@e5");
    EXPECT_EQ(t.basis_labels[120], "v:e0@e0");
    EXPECT_EQ(t.basis_labels[247], "w:e7@e7");
    const StructureTable f = build_structure_table(AlgebraId::f4);
    EXPECT_EQ(f.basis_labels[0], "so8:e0^e1");
    EXPECT_EQ(f.basis_labels[28], "u:e0");
    EXPECT_EQ(f.basis_labels[51], "w:e7");
}

TEST(CompiledTable, ScaleAndBounds) {
    const CompiledTable c = compile_table(e8_table());
    EXPECT_EQ(c.scale, 2);
    EXPECT_EQ(c.max_abs_val, 8);
    EXPECT_GT(c.max_row_support, 0);
    // ordered rows are skew: row(j,i) = -row(i,j); spot check through values
    const TableRows rows(e8_table());
    for (int i : {0, 57, 130})
        for (int j : {5, 60, 201}) {
            const auto& fwd = rows(i, j);
            const auto& bwd = rows(j, i);
            ASSERT_EQ(fwd.size(), bwd.size());
            for (std::size_t n = 0; n < fwd.size(); ++n) {
                EXPECT_EQ(fwd[n].first, bwd[n].first);
                EXPECT_EQ(fwd[n].second, -bwd[n].second);
            }
        }
}

TEST(TableRows, BracketMatchesDirectEvaluationOnRandomPairs) {
    const TableRows rows(e8_table());
    SplitMix64 rng(424242);
    for (int n = 0; n < 25; ++n) {
        const auto xc = random_dense_coords(rng, 248);
        const auto yc = random_dense_coords(rng, 248);
        std::array<Rational, 248> xa, ya;
        std::copy(xc.begin(), xc.end(), xa.begin());
        std::copy(yc.begin(), yc.end(), ya.begin());
        const auto direct = e8::coords(bracket(e8::from_coords(xa), e8::from_coords(ya)));
        const auto tabled = rows.bracket(xc, yc);
        for (int k = 0; k < 248; ++k) EXPECT_EQ(tabled[k], direct[k]);
    }
}

TEST(VerifyJacobi, SampledModeIsDeterministic) {
    const StructureTable t = build_structure_table(AlgebraId::f4);
    const auto a = verify_jacobi_sampled(t, 50, 7);
    const auto b = verify_jacobi_sampled(t, 50, 7);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.cases, 50u);
    EXPECT_EQ(a.mode, b.mode);
    EXPECT_EQ(a.mode, "sampled(N=50,seed=7)");
}

TEST(VerifyJacobi, CorruptedTableIsDetected) {
    StructureTable bad = corrupt_entry(e8_table(), 0);
    SweepOptions opts;
    opts.jobs = 0;
    const auto rep = verify_jacobi_exhaustive(bad, opts);
    EXPECT_FALSE(rep.passed());
    EXPECT_GE(rep.failures.size(), 1u);
    // the failure names a concrete triple and residual
    EXPECT_EQ(rep.failures.front().indices.size(), 4u);
    EXPECT_FALSE(rep.failures.front().detail.empty());
}

TEST(VerifyJacobi, JobCountDoesNotChangeTheReport) {
    const StructureTable t = build_structure_table(AlgebraId::so16);
    SweepOptions one;
    one.jobs = 1;
    SweepOptions many;
    many.jobs = 4;
    const auto a = verify_jacobi_exhaustive(t, one);
    const auto b = verify_jacobi_exhaustive(t, many);
    EXPECT_EQ(a.passed(), b.passed());
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.failures.size(), b.failures.size());

    StructureTable bad = corrupt_entry(t, 100);
    const auto fa = verify_jacobi_exhaustive(bad, one);
    const auto fb = verify_jacobi_exhaustive(bad, many);
    ASSERT_FALSE(fa.passed());
    ASSERT_EQ(fa.failures.size(), fb.failures.size());
    for (std::size_t n = 0; n < fa.failures.size(); ++n)
        EXPECT_EQ(fa.failures[n].indices, fb.failures[n].indices);
}

TEST(TableJson, RoundTrip) {
    const StructureTable t = build_structure_table(AlgebraId::f4);
    const StructureTable back = table_from_json(table_to_json(t));
    EXPECT_EQ(back.algebra, t.algebra);
    EXPECT_EQ(back.dim, t.dim);
    EXPECT_EQ(back.basis_labels, t.basis_labels);
    ASSERT_EQ(back.entries.size(), t.entries.size());
    for (std::size_t n = 0; n < t.entries.size(); ++n) EXPECT_EQ(back.entries[n], t.entries[n]);
}

TEST(TableJson, RejectsBadInput) {
    Json j = table_to_json(build_structure_table(AlgebraId::f4));
    j["dim"] = 53;
    EXPECT_THROW(table_from_json(j), DecodeError);
    Json k = table_to_json(build_structure_table(AlgebraId::f4));
    k["entries"][0]["i"] = 7;
    k["entries"][0]["j"] = 7; // i == j is invalid
    EXPECT_THROW(table_from_json(k), DecodeError);
}

TEST(TableCsv, Shape) {
    const StructureTable t = build_structure_table(AlgebraId::f4);
    const std::string csv = table_to_csv(t);
    EXPECT_EQ(csv.rfind("i,j,k,c\n", 0), 0u);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
              t.entries.size() + 1);
}

} // namespace
} // namespace e8alg
