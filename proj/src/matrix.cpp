#include "wst/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "wst/errors.hpp"

namespace wst {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& left = (*this)(i, k);
            if (left == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += left * other(k, j);
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix sum shape mismatch");
    }
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix difference shape mismatch");
    }
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * factor;
    return out;
}

Rational RationalMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::size_t>& indices) const {
    RationalMatrix out(rows_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= cols_) throw IndexOutOfRange("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, indices[j]);
    }
    return out;
}

RationalMatrix hcat(const RationalMatrix& left, const RationalMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hcat row mismatch");
    RationalMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
    }
    return out;
}

RationalMatrix vcat(const RationalMatrix& top, const RationalMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vcat column mismatch");
    RationalMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < top.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i) out(top.rows() + i, j) = bottom(i, j);
    }
    return out;
}

Echelon reduced_row_echelon(const RationalMatrix& a) {
    Echelon result;
    result.rref = a;
    RationalMatrix& m = result.rref;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == m.rows()) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        }
        const Rational inv = Rational(1) / m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        result.pivot_columns.push_back(col);
        ++r;
    }
    result.rank = r;
    return result;
}

std::size_t rank(const RationalMatrix& a) {
    return reduced_row_echelon(a).rank;
}

RationalMatrix kernel_basis(const RationalMatrix& a) {
    const Echelon ech = reduced_row_echelon(a);
    std::vector<std::size_t> free_columns;
    {
        std::size_t next_pivot = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (next_pivot < ech.pivot_columns.size() && ech.pivot_columns[next_pivot] == j) {
                ++next_pivot;
            } else {
                free_columns.push_back(j);
            }
        }
    }
    RationalMatrix basis(a.cols(), free_columns.size());
    for (std::size_t k = 0; k < free_columns.size(); ++k) {
        basis(free_columns[k], k) = 1;
        for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
            basis(ech.pivot_columns[i], k) = -ech.rref(i, free_columns[k]);
        }
    }
    return basis;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    const Echelon ech = reduced_row_echelon(hcat(a, b));
    for (std::size_t col : ech.pivot_columns) {
        if (col >= a.cols()) return std::nullopt;
    }
    RationalMatrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            x(ech.pivot_columns[i], j) = ech.rref(i, a.cols() + j);
        }
    }
    return x;
}

Rational determinant(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    RationalMatrix m = a;
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i) {
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Rational factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

std::vector<Rational> char_poly(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> coeff(n + 1);
    coeff[0] = 1;
    RationalMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < n; ++i) m(i, i) += coeff[k - 1];
            m = a * m;
        }
        coeff[k] = -m.trace() / Rational(static_cast<long>(k));
    }
    return coeff;
}

Rational pseudo_det(const RationalMatrix& s) {
    if (!s.is_symmetric()) throw std::invalid_argument("pseudo_det expects a symmetric matrix");
    const std::size_t n = s.rows();
    if (n == 0) return Rational(1);
    const std::vector<Rational> coeff = char_poly(s);
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (coeff[k] != 0) last_nonzero = k;
    }
    if (last_nonzero != rank(s)) {
        throw Error("pseudo-determinant cross-check failed: trailing zero count disagrees with rank");
    }
    return abs(coeff[last_nonzero]);
}

bool is_psd(const RationalMatrix& s) {
    if (!s.is_symmetric()) return false;
    RationalMatrix m = s;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m(i, i) < 0) return false;
            if (pivot == n && m(i, i) > 0) pivot = i;
        }
        if (pivot == n) {
            // Remaining diagonal vanishes; PSD forces the whole block to vanish.
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (m(i, j) != 0) return false;
            return true;
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(k, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, pivot), m(i, k));
        }
        const Rational d = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational factor = m(i, k) / d;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            m(k, j) = 0;
            m(j, k) = 0;
        }
    }
    return true;
}

}  // namespace wst
