#pragma once

// Structure-constant tables over the canonical bases. A table stores the
// exact coordinates c_ijk of [b_i, b_j] for i < j; skew-symmetry fills
// the rest. Tables are built by evaluating the bracket formulas directly
// on basis pairs, so they are a tabulation of the defining formulas, not
// an independent derivation.
//
// Two evaluation forms are derived from a table: rational ordered-pair
// rows (the general engine) and an integer-scaled compiled form used by
// the exhaustive sweeps. Compilation verifies that a common denominator
// exists and that every accumulation in the sweeps stays far below the
// int64 range, so the fast path is exact.

#include "e8alg/e8.hpp"
#include "e8alg/f4.hpp"
#include "e8alg/octoct.hpp"
#include "e8alg/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace e8alg {

enum class AlgebraId { f4, e8, e8_split, so16 };

inline const char* algebra_name(AlgebraId id) {
    switch (id) {
        case AlgebraId::f4: return "f4";
        case AlgebraId::e8: return "e8";
        case AlgebraId::e8_split: return "e8-split";
        case AlgebraId::so16: return "so16";
    }
    throw std::logic_error("unknown algebra id");
}

inline AlgebraId parse_algebra(const std::string& name) {
    if (name == "f4") return AlgebraId::f4;
    if (name == "e8") return AlgebraId::e8;
    if (name == "e8-split" || name == "e8_split") return AlgebraId::e8_split;
    if (name == "so16") return AlgebraId::so16;
    throw std::invalid_argument("unknown algebra \"" + name +
                                "\" (expected f4, e8, e8-split or so16)");
}

inline int algebra_dim(AlgebraId id) {
    switch (id) {
        case AlgebraId::f4: return 52;
        case AlgebraId::e8:
        case AlgebraId::e8_split: return 248;
        case AlgebraId::so16: return 120;
    }
    throw std::logic_error("unknown algebra id");
}

struct TableEntry {
    std::int32_t i; // basis indices, i < j
    std::int32_t j;
    std::int32_t k; // [b_i, b_j] has coefficient c on b_k
    Rational c;     // nonzero

    friend bool operator==(const TableEntry& a, const TableEntry& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k && a.c == b.c;
    }
};

struct StructureTable {
    AlgebraId algebra = AlgebraId::f4;
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<TableEntry> entries; // sorted by (i, j, k)
};

namespace detail {

inline std::string wedge_label(const std::string& prefix, int k) {
    const auto [i, j] = wedge_pair(k);
    return prefix + ":e" + std::to_string(i) + "^e" + std::to_string(j);
}

inline std::string tensor_label(const std::string& prefix, int i, int j) {
    return prefix + ":e" + std::to_string(i) + "@e" + std::to_string(j);
}

inline std::vector<std::string> f4_labels() {
    std::vector<std::string> l;
    l.reserve(52);
    for (int k = 0; k < 28; ++k) l.push_back(wedge_label("so8", k));
    for (const char* part : {"u", "v", "w"})
        for (int i = 0; i < 8; ++i) l.push_back(std::string(part) + ":e" + std::to_string(i));
    return l;
}

inline std::vector<std::string> e8_labels() {
    std::vector<std::string> l;
    l.reserve(248);
    for (int k = 0; k < 28; ++k) l.push_back(wedge_label("so8a", k));
    for (int k = 0; k < 28; ++k) l.push_back(wedge_label("so8b", k));
    for (const char* part : {"u", "v", "w"})
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) l.push_back(tensor_label(part, i, j));
    return l;
}

inline std::vector<std::string> so16_labels() {
    std::vector<std::string> l;
    l.reserve(120);
    for (int k = 0; k < 28; ++k) l.push_back(wedge_label("so8a", k));
    for (int k = 0; k < 28; ++k) l.push_back(wedge_label("so8b", k));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) l.push_back(tensor_label("x", i, j));
    return l;
}

// Fills entries from a bracket-of-basis-pair callback returning dense
// coordinates of [b_i, b_j].
template <typename BracketCoords>
void fill_entries(StructureTable& t, BracketCoords&& bracket_coords) {
    for (int i = 0; i < t.dim; ++i)
        for (int j = i + 1; j < t.dim; ++j) {
            const auto c = bracket_coords(i, j);
            for (int k = 0; k < t.dim; ++k)
                if (!c[static_cast<std::size_t>(k)].is_zero())
                    t.entries.push_back({i, j, k, c[static_cast<std::size_t>(k)]});
        }
}

} // namespace detail

namespace so16 {

constexpr int kDim = 120;

inline So16Element basis_element(int k) {
    So16Element e;
    if (k < 28)
        e.a.p = wedge_basis(k);
    else if (k < 56)
        e.a.q = wedge_basis(k - 28);
    else if (k < 120)
        e.x = OctOct::unit((k - 56) / 8, (k - 56) % 8);
    else
        throw std::out_of_range("so16 basis index out of range");
    return e;
}

inline std::vector<Rational> coords(const So16Element& e) {
    std::vector<Rational> c(120);
    const auto pc = wedge_coords(e.a.p);
    const auto qc = wedge_coords(e.a.q);
    for (int k = 0; k < 28; ++k) {
        c[k] = pc[k];
        c[28 + k] = qc[k];
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) c[56 + 8 * i + j] = e.x.m.a[i][j];
    return c;
}

} // namespace so16

inline StructureTable build_structure_table(AlgebraId id) {
    StructureTable t;
    t.algebra = id;
    t.dim = algebra_dim(id);
    switch (id) {
        case AlgebraId::f4: {
            t.basis_labels = detail::f4_labels();
            std::vector<F4Element> basis;
            basis.reserve(52);
            for (int k = 0; k < 52; ++k) basis.push_back(f4::basis_element(k));
            detail::fill_entries(t, [&](int i, int j) {
                return f4::coords(bracket(basis[i], basis[j]));
            });
            break;
        }
        case AlgebraId::e8:
        case AlgebraId::e8_split: {
            t.basis_labels = detail::e8_labels();
            std::vector<E8Element> basis;
            basis.reserve(248);
            for (int k = 0; k < 248; ++k) basis.push_back(e8::basis_element(k));
            const bool split = (id == AlgebraId::e8_split);
            detail::fill_entries(t, [&](int i, int j) {
                return e8::coords(split ? split_bracket(basis[i], basis[j])
                                        : bracket(basis[i], basis[j]));
            });
            break;
        }
        case AlgebraId::so16: {
            t.basis_labels = detail::so16_labels();
            std::vector<So16Element> basis;
            basis.reserve(120);
            for (int k = 0; k < 120; ++k) basis.push_back(so16::basis_element(k));
            detail::fill_entries(t, [&](int i, int j) {
                return so16::coords(bracket(basis[i], basis[j]));
            });
            break;
        }
    }
    return t;
}

/// Ordered-pair rows: rows(i, j) lists (k, c) of [b_i, b_j] for any i, j.
class TableRows {
public:
    using Row = std::vector<std::pair<std::int32_t, Rational>>;

    explicit TableRows(const StructureTable& t) : dim_(t.dim), rows_(static_cast<std::size_t>(t.dim) * t.dim) {
        for (const auto& e : t.entries) {
            rows_[index(e.i, e.j)].emplace_back(e.k, e.c);
            rows_[index(e.j, e.i)].emplace_back(e.k, -e.c);
        }
    }

    int dim() const { return dim_; }

    const Row& operator()(int i, int j) const { return rows_[index(i, j)]; }

    /// Bracket of two coordinate vectors through the table.
    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const {
        std::vector<Rational> out(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[static_cast<std::size_t>(j)].is_zero()) continue;
                const Row& row = (*this)(i, j);
                if (row.empty()) continue;
                const Rational p = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (const auto& [k, c] : row) out[static_cast<std::size_t>(k)] += p * c;
            }
        }
        return out;
    }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(j);
    }

    int dim_;
    std::vector<Row> rows_;
};

/// Integer-scaled ordered rows for the exhaustive sweeps. Exact: entry
/// values are numerators over a single common denominator `scale`, and
/// compilation proves the sweep accumulators cannot overflow.
struct CompiledTable {
    int dim = 0;
    std::int64_t scale = 1;
    std::vector<std::int32_t> row_begin; // dim*dim + 1
    std::vector<std::int32_t> col;
    std::vector<std::int64_t> val;
    std::int64_t max_abs_val = 0;
    int max_row_support = 0;

    std::pair<const std::int32_t*, const std::int32_t*> row_cols(int i, int j) const {
        const std::size_t r = static_cast<std::size_t>(i) * dim + j;
        return {col.data() + row_begin[r], col.data() + row_begin[r + 1]};
    }
};

inline CompiledTable compile_table(const StructureTable& t) {
    CompiledTable c;
    c.dim = t.dim;

    BigInt lcm = 1;
    for (const auto& e : t.entries) lcm = boost::multiprecision::lcm(lcm, rat_den(e.c));
    if (lcm > 1'000'000)
        throw std::runtime_error("structure constants have no small common denominator");
    c.scale = static_cast<std::int64_t>(lcm);

    const std::size_t n = static_cast<std::size_t>(t.dim);
    std::vector<std::int32_t> counts(n * n, 0);
    for (const auto& e : t.entries) {
        ++counts[static_cast<std::size_t>(e.i) * n + e.j];
        ++counts[static_cast<std::size_t>(e.j) * n + e.i];
    }
    c.row_begin.assign(n * n + 1, 0);
    for (std::size_t r = 0; r < n * n; ++r) c.row_begin[r + 1] = c.row_begin[r] + counts[r];
    c.col.resize(static_cast<std::size_t>(c.row_begin.back()));
    c.val.resize(c.col.size());

    std::vector<std::int32_t> cursor(c.row_begin.begin(), c.row_begin.end() - 1);
    const auto put = [&](int i, int j, int k, const BigInt& v) {
        const std::size_t r = static_cast<std::size_t>(i) * n + j;
        const auto pos = cursor[r]++;
        c.col[static_cast<std::size_t>(pos)] = k;
        c.val[static_cast<std::size_t>(pos)] = static_cast<std::int64_t>(v);
    };
    for (const auto& e : t.entries) {
        const BigInt v = rat_num(e.c) * (lcm / rat_den(e.c));
        if (abs(v) > 1'000'000)
            throw std::runtime_error("scaled structure constant too large");
        put(e.i, e.j, e.k, v);
        put(e.j, e.i, e.k, -v);
    }

    for (const auto& v : c.val) c.max_abs_val = std::max(c.max_abs_val, v < 0 ? -v : v);
    for (std::size_t r = 0; r < n * n; ++r)
        c.max_row_support = std::max(c.max_row_support, c.row_begin[r + 1] - c.row_begin[r]);

    // Worst accumulator in a Jacobi triple: 3 * support^2 products of two
    // entries. Keep a generous safety margin below int64.
    const std::int64_t m = c.max_abs_val;
    const std::int64_t s = c.max_row_support;
    if (!(m < (1 << 20) && 3 * s * s * m * m < (std::int64_t{1} << 56)))
        throw std::runtime_error("structure table too dense for the integer sweep");
    return c;
}

/// Diagonal of the invariant scalar product on the canonical e8 basis.
inline std::vector<Rational> e8_metric_diagonal() {
    std::vector<Rational> d(248);
    for (int k = 0; k < 248; ++k) {
        const E8Element b = e8::basis_element(k);
        d[static_cast<std::size_t>(k)] = scalar_product(b, b);
    }
    return d;
}

} // namespace e8alg
