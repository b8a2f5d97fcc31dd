#pragma once

#include <optional>
#include <vector>

#include "structkit/matrix.hpp"
#include "structkit/poly.hpp"

namespace structkit {

// Invariant polynomials of A in the order i1, i2, ..., in (i1 is the minimal
// polynomial; trailing entries are 1). Computed from the Smith form of
// λI - A over Q[λ].
std::vector<Poly> invariant_polys(const RatMatrix& a);

struct ElementaryDivisor {
    Poly base;  // irreducible, monic
    unsigned exponent = 1;

    [[nodiscard]] Poly power() const { return base.pow(exponent); }
    friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};

// Sorted by base (poly_less), then exponent descending.
std::vector<ElementaryDivisor> elementary_divisors(const RatMatrix& a);
std::vector<ElementaryDivisor> elementary_divisors_of(const std::vector<Poly>& invariants);
void sort_divisors(std::vector<ElementaryDivisor>& divs);

RatMatrix companion(const Poly& p);

// result = transform * A * transform^{-1}
struct NormalForm {
    RatMatrix form;
    RatMatrix transform;
};

NormalForm first_nnf(const RatMatrix& a);
NormalForm second_nnf(const RatMatrix& a);

// T with B = T A T^{-1}, or nullopt when A and B are not similar.
std::optional<RatMatrix> similarity_transform(const RatMatrix& a, const RatMatrix& b);

}  // namespace structkit

namespace structkit {

// Splits A at zero subdiagonal entries and returns the polynomial of each
// diagonal block when every block is a companion matrix and A vanishes
// outside the blocks; nullopt otherwise.
std::optional<std::vector<Poly>> companion_blocks(const RatMatrix& a);

}  // namespace structkit
