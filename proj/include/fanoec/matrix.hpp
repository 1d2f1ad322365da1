#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>

#include "fanoec/numeric.hpp"

namespace fanoec {

// Dense matrix over arbitrary-precision integers. Dimensions are fixed at
// construction; all arithmetic is exact.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    template <typename T>
    static IntMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return IntMatrix(0, 0);
        IntMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = Int(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        IntMatrix p(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += x * rhs.at(k, j);
            }
        return p;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("apply: shape mismatch");
        std::vector<Int> out(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::vector<Int> row(std::size_t i) const {
        std::vector<Int> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " ") << "[";
            for (std::size_t j = 0; j < m.cols_; ++j) os << m.at(i, j) << (j + 1 < m.cols_ ? ", " : "");
            os << "]" << (i + 1 < m.rows_ ? ",\n" : "]");
        }
        return os;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// U * A * V = S with S diagonal, d_i | d_{i+1}, U and V unimodular.
struct SmithDecomposition {
    IntMatrix u, s, v;

    std::size_t rank() const {
        std::size_t r = 0, n = std::min(s.rows(), s.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (s.at(i, i) != 0) ++r;
        return r;
    }
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
inline void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

inline void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

inline void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace detail

// Elementary row/column reduction with minimal-|pivot| selection. Adequate at
// the sizes arising here (<= ~20 x 20); no modular techniques.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    SmithDecomposition d{IntMatrix::identity(r), a, IntMatrix::identity(c)};
    IntMatrix& s = d.s;
    IntMatrix& u = d.u;
    IntMatrix& v = d.v;

    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
        // find minimal nonzero |entry| in the trailing block
        for (;;) {
            std::size_t pi = t, pj = t;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (s.at(i, j) == 0) continue;
                    Int ab = abs(s.at(i, j));
                    if (!found || ab < best) {
                        found = true;
                        best = ab;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) { t = n; break; }  // trailing block is zero
            detail::swap_rows(s, t, pi);
            detail::swap_rows(u, t, pi);
            detail::swap_cols(s, t, pj);
            detail::swap_cols(v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = floor_div(s.at(i, t), s.at(t, t));
                detail::add_row(s, i, t, q);
                detail::add_row(u, i, t, q);
                if (s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = floor_div(s.at(t, j), s.at(t, t));
                detail::add_col(s, j, t, q);
                detail::add_col(v, j, t, q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block, else absorb a bad row
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        detail::add_row(s, t, i, Int(-1));
                        detail::add_row(u, t, i, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (t == n) break;
    }
    // normalize signs so diagonal entries are non-negative
    for (std::size_t t = 0; t < n; ++t) {
        if (s.at(t, t) < 0) {
            detail::negate_row(s, t);
            detail::negate_row(u, t);
        }
    }
    return d;
}

// Basis of the saturated integer kernel {x : A x = 0}, returned as matrix
// columns. Sign-normalized (first nonzero entry positive) and sorted for
// deterministic output.
inline IntMatrix kernel_basis(const IntMatrix& a) {
    SmithDecomposition d = smith_normal_form(a);
    const std::size_t rank = d.rank();
    const std::size_t k = a.cols() - rank;
    std::vector<std::vector<Int>> cols;
    for (std::size_t j = rank; j < a.cols(); ++j) {
        std::vector<Int> col = d.v.col(j);
        for (const Int& x : col)
            if (x != 0) {
                if (x < 0)
                    for (Int& y : col) y = -y;
                break;
            }
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end());
    IntMatrix out(a.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) out.at(i, j) = cols[j][i];
    return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            detail::swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by Bareiss
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

// Determinants of all cols x cols submatrices (rows >= cols), as a sorted
// multiset.
inline std::vector<Int> maximal_minors(const IntMatrix& a) {
    if (a.rows() < a.cols()) throw std::invalid_argument("maximal_minors: requires rows >= cols");
    const std::size_t n = a.rows(), k = a.cols();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Int> out;
    for (;;) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(idx[i], j);
        out.push_back(determinant(sub));
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

// Solve A x = b over the rationals; nullopt if inconsistent or underdetermined
// solutions are ambiguous (A must have full column rank for a unique answer).
inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Int>& b) {
    const std::size_t r = a.rows(), c = a.cols();
    if (b.size() != r) throw std::invalid_argument("solve_rational: shape mismatch");
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(c + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m[i][j] = Rat(a.at(i, j));
        m[i][c] = Rat(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && m[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(m[p], m[row]);
        Rat inv = m[row][col];
        for (std::size_t j = col; j <= c; ++j) m[row][j] /= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j <= c; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < r; ++i)
        if (m[i][c] != 0) return std::nullopt;  // inconsistent
    if (pivot_col.size() != c) return std::nullopt;  // not full column rank
    std::vector<Rat> x(c);
    for (std::size_t i = 0; i < c; ++i) x[i] = m[i][c];
    return x;
}

// Inverse of a unimodular integer matrix, exactly.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("unimodular_inverse: not square");
    const std::size_t n = a.rows();
    Int det = determinant(a);
    if (det != 1 && det != -1) throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> e(n, Int(0));
        e[j] = 1;
        auto x = solve_rational(a, e);
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_integral((*x)[i])) throw std::logic_error("unimodular_inverse: non-integer entry");
            inv.at(i, j) = (*x)[i].get_num();
        }
    }
    return inv;
}

}  // namespace fanoec
