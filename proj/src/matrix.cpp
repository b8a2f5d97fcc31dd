#include "structkit/matrix.hpp"

#include <ostream>

#include "structkit/errors.hpp"

namespace structkit {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw ShapeError("matrix entry count does not match its dimensions");
    }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw ShapeError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& diag) {
    RatMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

RatMatrix RatMatrix::column(const RatVector& v) { return {v.size(), 1, v}; }

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<RatVector>& cols) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) {
            throw ShapeError("column length mismatch");
        }
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = cols[j][i];
        }
    }
    return m;
}

RatMatrix RatMatrix::block_diagonal(const std::vector<RatMatrix>& blocks) {
    std::size_t r = 0;
    std::size_t c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    RatMatrix m(r, c);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                m(r0 + i, c0 + j) = b(i, j);
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

RatMatrix RatMatrix::permutation(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    RatMatrix m(n, n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || seen[perm[i]]) {
            throw DomainError("not a permutation");
        }
        seen[perm[i]] = true;
        m(i, perm[i]) = 1;
    }
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw ShapeError("block out of range");
    }
    RatMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            b(i, j) = (*this)(r0 + i, c0 + j);
        }
    }
    return b;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool RatMatrix::is_diagonal() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::size_t RatMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
        n += e.is_zero() ? 0 : 1;
    }
    return n;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw ShapeError("matrix addition shape mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += rhs.entries_[k];
    }
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw ShapeError("matrix subtraction shape mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= rhs.entries_[k];
    }
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw ShapeError("matrix product shape mismatch");
    }
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols_ != v.size()) {
        throw ShapeError("matrix-vector product shape mismatch");
    }
    RatVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero()) {
                out[i] += a(i, k) * v[k];
            }
        }
    }
    return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) {
        throw ShapeError("hstack row mismatch");
    }
    RatMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(i, j) = a(i, j);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            m(i, a.cols() + j) = b(i, j);
        }
    }
    return m;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) {
        throw ShapeError("vstack column mismatch");
    }
    RatMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            m(a.rows() + i, j) = b(i, j);
        }
    }
    return m;
}

RatMatrix matrix_power(const RatMatrix& a, unsigned k) {
    if (!a.is_square()) {
        throw ShapeError("power of a non-square matrix");
    }
    RatMatrix result = RatMatrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) {
        result = result * a;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j == 0 ? "" : ", ") << m(i, j);
        }
        os << "]";
    }
    return os << "]";
}

}  // namespace structkit
