#ifndef HYPERLOC_MATRIX_HPP
#define HYPERLOC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <hyperloc/error.hpp>
#include <hyperloc/rational.hpp>

namespace hyperloc
{

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        m_rows = rows.size();
        m_cols = m_rows ? rows.begin()->size() : 0;
        m_data.reserve(m_rows * m_cols);
        for (const auto &r : rows) {
            if (r.size() != m_cols) {
                throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
            }
            m_data.insert(m_data.end(), r.begin(), r.end());
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>> &rows, std::size_t cols_if_empty = 0)
    {
        Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.m_cols) {
                throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
            }
            for (std::size_t j = 0; j < m.m_cols; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>> &cols, std::size_t rows_if_empty = 0)
    {
        Matrix m(cols.empty() ? rows_if_empty : cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.m_rows) {
                throw Error(ErrorKind::ShapeMismatch, "ragged matrix columns");
            }
            for (std::size_t i = 0; i < m.m_rows; ++i) {
                m(i, j) = cols[j][i];
            }
        }
        return m;
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const
    {
        return m_rows;
    }
    std::size_t cols() const
    {
        return m_cols;
    }

    T &operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_cols + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_cols + j];
    }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(m_data.begin() + static_cast<std::ptrdiff_t>(i * m_cols),
                              m_data.begin() + static_cast<std::ptrdiff_t>((i + 1) * m_cols));
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            c[i] = (*this)(i, j);
        }
        return c;
    }

    std::vector<std::vector<T>> to_rows() const
    {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < m_rows; ++i) {
            out.push_back(row(i));
        }
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    Matrix select_columns(std::span<const std::size_t> idx) const
    {
        Matrix s(m_rows, idx.size());
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t k = 0; k < idx.size(); ++k) {
                s(i, k) = (*this)(i, idx[k]);
            }
        }
        return s;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < m_cols; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < m_rows; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }

    bool is_zero() const
    {
        for (const auto &v : m_data) {
            if (v != T(0)) {
                return false;
            }
        }
        return true;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.m_cols != b.m_rows) {
            throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
        }
        Matrix c(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const T &aik = a(i, k);
                if (aik == T(0)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.m_cols; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    std::vector<T> apply(const std::vector<T> &v) const
    {
        if (v.size() != m_cols) {
            throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
        }
        std::vector<T> out(m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                out[i] += (*this)(i, j) * v[j];
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<T> m_data;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;

RatMatrix to_rational(const IntMatrix &m);
RatVector to_rational(const IntVector &v);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix &m);

struct RowEchelon {
    RatMatrix reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(const RatMatrix &m);
std::size_t rank(const RatMatrix &m);
std::size_t rank(const IntMatrix &m);

// Some x with m x = b, or nullopt.
std::optional<RatVector> solve(const RatMatrix &m, const RatVector &b);
// Basis of {x : m x = 0}.
std::vector<RatVector> nullspace(const RatMatrix &m);

// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive_integer(const RatVector &v);
// Clears denominators without dividing by the content.
IntVector clear_denominators(const RatVector &v);

Rational dot(const RatVector &a, const RatVector &b);
Integer dot(const IntVector &a, const IntVector &b);

std::string to_string(const IntVector &v);
std::string to_string(const RatVector &v);

} // namespace hyperloc

#endif
