#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "structkit/rational.hpp"

namespace structkit {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    /// Row-wise literal: RatMatrix{{1, 2}, {3, 4}}.
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static RatMatrix diagonal(const RatVector& diag);
    static RatMatrix column(const RatVector& v);
    static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& cols);
    static RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks);
    /// Permutation matrix with P(i, perm[i]) = 1 (0-based perm).
    static RatMatrix permutation(const std::vector<std::size_t>& perm);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    [[nodiscard]] std::span<const Rational> entries() const { return entries_; }
    [[nodiscard]] RatVector row(std::size_t i) const;
    [[nodiscard]] RatVector col(std::size_t j) const;
    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_diagonal() const;
    [[nodiscard]] std::size_t nonzero_count() const;

    RatMatrix& operator+=(const RatMatrix& rhs);
    RatMatrix& operator-=(const RatMatrix& rhs);
    RatMatrix& operator*=(const Rational& s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVector operator*(const RatMatrix& a, const RatVector& v);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// [a | b], same row count.
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
/// [a ; b], same column count.
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix matrix_power(const RatMatrix& a, unsigned k);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace structkit
