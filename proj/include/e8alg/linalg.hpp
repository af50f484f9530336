#pragma once

// Exact rational linear algebra on dynamically sized matrices: row
// echelon rank, kernel bases, and the signature of a symmetric matrix by
// congruence reduction with rational pivots. No floating point anywhere;
// definiteness claims produced here are certificates, not estimates.

#include "e8alg/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace e8alg {

class MatQ {
public:
    MatQ() = default;
    MatQ(int rows, int cols)
        : rows_(rows), cols_(cols),
          d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return d_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return d_[idx(i, j)]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    friend bool operator==(const MatQ& a, const MatQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> d_;
};

/// Incremental row-space rank tracker (forward-reduced echelon rows).
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the span; inserts the remainder if nonzero.
    /// Returns true when the rank grew.
    bool insert(std::vector<Rational> v) {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const int lead = leads_[r];
            if (!v[static_cast<std::size_t>(lead)].is_zero()) {
                const Rational f = v[static_cast<std::size_t>(lead)];
                for (int c = lead; c < cols_; ++c)
                    if (!rows_[r][static_cast<std::size_t>(c)].is_zero())
                        v[static_cast<std::size_t>(c)] -= f * rows_[r][static_cast<std::size_t>(c)];
            }
        }
        int lead = -1;
        for (int c = 0; c < cols_; ++c)
            if (!v[static_cast<std::size_t>(c)].is_zero()) {
                lead = c;
                break;
            }
        if (lead < 0) return false;
        const Rational inv = Rational(1) / v[static_cast<std::size_t>(lead)];
        for (int c = lead; c < cols_; ++c)
            if (!v[static_cast<std::size_t>(c)].is_zero()) v[static_cast<std::size_t>(c)] *= inv;
        // keep rows ordered by lead column
        std::size_t pos = 0;
        while (pos < rows_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> leads_;
};

inline int rank(const MatQ& m) {
    RowSpan span(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
        span.insert(std::move(row));
    }
    return span.rank();
}

/// Basis of the null space {x : m x = 0}, as column vectors.
inline std::vector<std::vector<Rational>> kernel_basis(MatQ m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < cols; ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c);
            for (int j = c; j < cols; ++j)
                if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<std::vector<Rational>> basis;
    std::vector<int> col_pivot_row(static_cast<std::size_t>(cols), -1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        col_pivot_row[static_cast<std::size_t>(pivot_col[i])] = static_cast<int>(i);
    for (int c = 0; c < cols; ++c) {
        if (col_pivot_row[static_cast<std::size_t>(c)] >= 0) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(c)] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = -m.at(static_cast<int>(i), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Signature {
    int plus = 0;
    int minus = 0;
    int zero = 0;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
    }
};

/// Sylvester signature of a symmetric rational matrix by symmetric
/// Gaussian congruence. Zero-diagonal blocks are handled by the
/// row+column addition transform, which is valid in characteristic 0.
inline Signature signature(MatQ s) {
    if (!s.is_symmetric()) throw std::invalid_argument("signature requires a symmetric matrix");
    const int n = s.rows();
    Signature sig;

    const auto add_row_col = [&](int dst, int src) {
        for (int j = 0; j < n; ++j) s.at(dst, j) += s.at(src, j);
        for (int i = 0; i < n; ++i) s.at(i, dst) += s.at(i, src);
    };
    const auto swap_row_col = [&](int a, int b) {
        for (int j = 0; j < n; ++j) std::swap(s.at(a, j), s.at(b, j));
        for (int i = 0; i < n; ++i) std::swap(s.at(i, a), s.at(i, b));
    };

    for (int p = 0; p < n; ++p) {
        if (s.at(p, p).is_zero()) {
            int q = -1;
            for (int i = p + 1; i < n; ++i)
                if (!s.at(i, i).is_zero()) {
                    q = i;
                    break;
                }
            if (q >= 0) {
                swap_row_col(p, q);
            } else {
                // all remaining diagonal entries vanish; look off-diagonal
                int r = -1, c = -1;
                for (int i = p; i < n && r < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!s.at(i, j).is_zero()) {
                            r = i;
                            c = j;
                            break;
                        }
                if (r < 0) {
                    sig.zero += n - p;
                    break;
                }
                add_row_col(r, c); // s(r,r) becomes 2 s(r,c) != 0
                if (r != p) swap_row_col(p, r);
            }
        }
        const Rational pivot = s.at(p, p);
        if (pivot > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (int i = p + 1; i < n; ++i) {
            if (s.at(i, p).is_zero()) continue;
            const Rational f = s.at(i, p) / pivot;
            for (int j = p; j < n; ++j)
                if (!s.at(p, j).is_zero()) s.at(i, j) -= f * s.at(p, j);
        }
        // restore symmetry of the trailing block explicitly
        for (int i = p + 1; i < n; ++i) s.at(p, i) = 0;
        for (int i = p + 1; i < n; ++i)
            for (int j = p; j < i; ++j) s.at(j, i) = s.at(i, j);
        for (int i = p + 1; i < n; ++i) s.at(i, p) = 0;
    }
    return sig;
}

} // namespace e8alg
