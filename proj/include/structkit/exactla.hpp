#pragma once

#include <cstddef>
#include <vector>

#include "structkit/matrix.hpp"
#include "structkit/poly.hpp"

namespace structkit {

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Determinant by fraction-free elimination. Throws ShapeError if not square.
Rational determinant(const RatMatrix& m);

Rational trace(const RatMatrix& m);

/// Throws SingularMatrixError when m is singular, ShapeError when not square.
RatMatrix inverse(const RatMatrix& m);

bool is_invertible(const RatMatrix& m);

struct RowEchelon {
    RatMatrix reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(const RatMatrix& m);

/// One solution X of m·X = rhs (free variables set to zero). Throws
/// DomainError when the system is inconsistent.
RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs);

/// Basis of {v : m·v = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// det(λI - A) by the Faddeev–LeVerrier recurrence. Throws ShapeError if A
/// is not square.
Poly char_poly(const RatMatrix& a);

/// p(A)
RatMatrix eval_poly(const Poly& p, const RatMatrix& a);

/// p(A)·v, evaluated by Horner's rule without forming p(A).
RatVector apply_poly(const Poly& p, const RatMatrix& a, const RatVector& v);

/// Monic polynomial ψ of least degree with ψ(A)·v = 0.
Poly local_minimal_poly(const RatMatrix& a, const RatVector& v);

/// Companion matrix of a monic polynomial λ^n + a_1 λ^{n-1} + ... + a_n:
/// ones on the subdiagonal and (-a_n, ..., -a_1) down the last column.
/// Throws DomainError for non-monic or constant input.
RatMatrix companion_matrix(const Poly& p);

struct FrobeniusForm {
    RatMatrix form;       // F = T·A·T⁻¹
    RatMatrix transform;  // T
    /// Invariant polynomials of positive degree, i_1 first; each divides the
    /// one before it.
    std::vector<Poly> invariant_factors;
};

/// Rational canonical (first natural normal) form by iterated cyclic-vector
/// decomposition. When A already is in that form, T is the identity.
FrobeniusForm frobenius_form(const RatMatrix& a);

struct Diagonalization {
    RatMatrix diagonal;   // Dg = T·A·T⁻¹, eigenvalues ascending
    RatMatrix transform;  // T
};

/// Throws IrrationalSpectrumError when some eigenvalue is not rational and
/// DefectiveMatrixError when A is not diagonalizable.
Diagonalization diagonalize_rational(const RatMatrix& a);

}  // namespace structkit
