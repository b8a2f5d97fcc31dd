#pragma once

// Independent reference implementations used only by the tests.

#include <cstddef>
#include <vector>

#include "structkit/linsys.hpp"
#include "structkit/rng.hpp"
#include "structkit/structured.hpp"

namespace oracle {

using structkit::LinearSystem;
using structkit::Poly;
using structkit::RatMatrix;
using structkit::Rational;
using structkit::Rng;
using structkit::StructuredSystem;

// Invariant polynomials i1..in from gcds of all k-by-k minors of λI - A.
std::vector<Poly> invariants_by_minors(const RatMatrix& a);

// Size of the largest nonsingular square submatrix.
std::size_t rank_by_minors(const RatMatrix& m);

// det(λI - A) by cofactor expansion.
Poly char_poly_by_cofactors(const RatMatrix& a);

// Exhaustive search over predecessor (or successor) assignments for a
// disjoint cover of all states by U-rooted paths and cycles (or Y-topped
// paths and cycles), read directly off the pattern.
bool cover_u_rooted(const StructuredSystem& ss);
bool cover_y_topped(const StructuredSystem& ss);
// Transitive closure: every state reached from an input / reaching an output.
bool all_reached_from_inputs(const StructuredSystem& ss);
bool all_reach_outputs(const StructuredSystem& ss);
bool generic_minimal_brute(const StructuredSystem& ss);

// Random data.
RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi, unsigned density = 100);
RatMatrix random_invertible(Rng& rng, std::size_t n, long lo = -3, long hi = 3);
LinearSystem random_system(Rng& rng, std::size_t nx, std::size_t nu, std::size_t ny, unsigned density = 60);
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

// First k such that the outputs of the two systems differ for the input
// sequence that is e_j at step 0 and zero afterwards (any j), or -1.
long distinguishing_step(const LinearSystem& s1, const LinearSystem& s2, std::size_t horizon);

}  // namespace oracle
