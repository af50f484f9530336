#pragma once

// Killing form B(x,y) = tr(ad_x ∘ ad_y) from a structure table, exact
// signatures, and the simplicity certificate (trivial center, full
// derived algebra, nondegenerate Killing form).

#include "e8alg/linalg.hpp"
#include "e8alg/structure_table.hpp"
#include "e8alg/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace e8alg {

/// Exact symmetric matrix B_ij = tr(ad_i ad_j) = Σ_{m,l} c_im^l c_jl^m.
/// Computed by bucketing the scaled integer entries over (m,l) pairs;
/// the accumulators stay well inside int64 (bound checked by
/// compile_table).
inline MatQ killing_form(const StructureTable& table) {
    const CompiledTable ct = compile_table(table);
    const std::size_t n = static_cast<std::size_t>(ct.dim);

    // bucket[(m,l)] collects (i, c_im^l)
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> bucket(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m) {
            const std::size_t r = i * n + m;
            for (std::int32_t e = ct.row_begin[r]; e < ct.row_begin[r + 1]; ++e)
                bucket[m * n + ct.col[static_cast<std::size_t>(e)]].emplace_back(
                    static_cast<std::int32_t>(i), ct.val[static_cast<std::size_t>(e)]);
        }

    std::vector<std::int64_t> acc(n * n, 0);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t l = 0; l < n; ++l) {
            const auto& left = bucket[m * n + l];
            if (left.empty()) continue;
            const auto& right = bucket[l * n + m];
            for (const auto& [i, ci] : left)
                for (const auto& [j, cj] : right)
                    acc[static_cast<std::size_t>(i) * n + j] += ci * cj;
        }

    const Rational scale_sq(std::int64_t{1}, ct.scale * ct.scale);
    MatQ b(ct.dim, ct.dim);
    for (int i = 0; i < ct.dim; ++i)
        for (int j = 0; j < ct.dim; ++j) {
            const std::int64_t v = acc[static_cast<std::size_t>(i) * n + j];
            if (v != 0) b.at(i, j) = v * scale_sq;
        }
    return b;
}

/// If B = c * G entrywise for a single constant c, returns c; throws
/// otherwise. G is a full symmetric matrix.
inline Rational proportionality_constant(const MatQ& b, const MatQ& g) {
    if (b.rows() != g.rows() || b.cols() != g.cols())
        throw std::invalid_argument("matrix size mismatch");
    Rational c;
    bool have = false;
    for (int i = 0; i < b.rows() && !have; ++i)
        for (int j = 0; j < b.cols() && !have; ++j)
            if (!g.at(i, j).is_zero()) {
                c = b.at(i, j) / g.at(i, j);
                have = true;
            }
    if (!have) throw std::invalid_argument("reference form is zero");
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (b.at(i, j) != c * g.at(i, j))
                throw std::runtime_error("forms are not proportional at entry (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    return c;
}

/// [b_g, x] in coordinates, through the table rows.
inline std::vector<Rational> ad_apply(const TableRows& rows, int g,
                                      const std::vector<Rational>& x) {
    std::vector<Rational> y(static_cast<std::size_t>(rows.dim()));
    for (int j = 0; j < rows.dim(); ++j) {
        if (x[static_cast<std::size_t>(j)].is_zero()) continue;
        for (const auto& [k, c] : rows(g, j))
            y[static_cast<std::size_t>(k)] += c * x[static_cast<std::size_t>(j)];
    }
    return y;
}

/// Dimension of {x : [b_g, x] = 0 for all g in generators}, by
/// intersecting kernels one generator at a time.
inline int joint_kernel_dim(const TableRows& rows, const std::vector<int>& generators) {
    const int n = rows.dim();
    // K holds a basis (as columns) of the running intersection.
    std::vector<std::vector<Rational>> k_basis;
    k_basis.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = 1;
        k_basis.push_back(std::move(e));
    }
    for (const int g : generators) {
        if (k_basis.empty()) break;
        const int k = static_cast<int>(k_basis.size());
        MatQ m(n, k);
        for (int t = 0; t < k; ++t) {
            const auto col = ad_apply(rows, g, k_basis[static_cast<std::size_t>(t)]);
            for (int i = 0; i < n; ++i) m.at(i, t) = col[static_cast<std::size_t>(i)];
        }
        const auto ker = kernel_basis(std::move(m));
        std::vector<std::vector<Rational>> next;
        next.reserve(ker.size());
        for (const auto& coeffs : ker) {
            std::vector<Rational> v(static_cast<std::size_t>(n));
            for (int t = 0; t < k; ++t) {
                if (coeffs[static_cast<std::size_t>(t)].is_zero()) continue;
                for (int i = 0; i < n; ++i)
                    if (!k_basis[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)].is_zero())
                        v[static_cast<std::size_t>(i)] +=
                            coeffs[static_cast<std::size_t>(t)] *
                            k_basis[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
            }
            next.push_back(std::move(v));
        }
        k_basis = std::move(next);
    }
    return static_cast<int>(k_basis.size());
}

inline int center_dim(const StructureTable& table) {
    const TableRows rows(table);
    std::vector<int> gens(static_cast<std::size_t>(table.dim));
    for (int i = 0; i < table.dim; ++i) gens[static_cast<std::size_t>(i)] = i;
    return joint_kernel_dim(rows, gens);
}

/// Rank of the span of all [b_i, b_j].
inline int derived_dim(const StructureTable& table) {
    RowSpan span(table.dim);
    std::vector<Rational> row(static_cast<std::size_t>(table.dim));
    std::size_t e = 0;
    while (e < table.entries.size()) {
        const auto i = table.entries[e].i;
        const auto j = table.entries[e].j;
        std::fill(row.begin(), row.end(), Rational(0));
        while (e < table.entries.size() && table.entries[e].i == i && table.entries[e].j == j) {
            row[static_cast<std::size_t>(table.entries[e].k)] = table.entries[e].c;
            ++e;
        }
        span.insert(row);
        if (span.rank() == table.dim) break;
    }
    return span.rank();
}

struct SimplicityCertificate {
    int center = 0;
    int derived = 0;
    Signature killing_sig;
    VerificationReport report;
};

/// center = 0, [g,g] = g, Killing nondegenerate. Reported, not assumed;
/// the report carries failures when a condition is violated.
inline SimplicityCertificate simplicity_certificate(const StructureTable& table) {
    SimplicityCertificate cert;
    cert.center = center_dim(table);
    cert.derived = derived_dim(table);
    cert.killing_sig = signature(killing_form(table));

    auto& rep = cert.report;
    rep.check = "simplicity";
    rep.algebra = algebra_name(table.algebra);
    rep.mode = "exhaustive";
    rep.cases = static_cast<std::uint64_t>(table.dim);
    rep.notes.push_back("center_dim=" + std::to_string(cert.center));
    rep.notes.push_back("derived_dim=" + std::to_string(cert.derived));
    rep.notes.push_back("killing_signature=(" + std::to_string(cert.killing_sig.plus) + "," +
                        std::to_string(cert.killing_sig.minus) + "," +
                        std::to_string(cert.killing_sig.zero) + ")");
    if (cert.center != 0)
        rep.failures.push_back({{cert.center}, "center has positive dimension"});
    if (cert.derived != table.dim)
        rep.failures.push_back({{cert.derived}, "derived algebra is a proper subspace"});
    if (cert.killing_sig.zero != 0)
        rep.failures.push_back({{cert.killing_sig.zero}, "Killing form is degenerate"});
    return cert;
}

/// Full Gram matrix of the invariant scalar product on the e8 basis.
inline MatQ e8_scalar_product_matrix() {
    MatQ g(248, 248);
    std::vector<E8Element> basis;
    basis.reserve(248);
    for (int k = 0; k < 248; ++k) basis.push_back(e8::basis_element(k));
    for (int i = 0; i < 248; ++i)
        for (int j = i; j < 248; ++j) {
            const Rational v = scalar_product(basis[static_cast<std::size_t>(i)],
                                              basis[static_cast<std::size_t>(j)]);
            if (!v.is_zero()) {
                g.at(i, j) = v;
                g.at(j, i) = v;
            }
        }
    return g;
}

} // namespace e8alg
