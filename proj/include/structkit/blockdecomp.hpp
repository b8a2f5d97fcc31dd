#pragma once

#include <cstddef>
#include <vector>

#include "structkit/canon.hpp"
#include "structkit/linsys.hpp"
#include "structkit/sysgraph.hpp"

namespace structkit {

struct BlockBounds {
    std::size_t k = 0;  // most elementary divisors sharing one base
    std::size_t d = 0;  // number of elementary divisors
};

BlockBounds block_bounds(const RatMatrix& a);
BlockBounds block_bounds_of(const std::vector<ElementaryDivisor>& divs);

using DivisorPartition = std::vector<std::vector<ElementaryDivisor>>;

// Exactly l parts, no base repeated within a part. InfeasibleCountError
// when l lies outside [k, d].
DivisorPartition partition_divisors(const std::vector<ElementaryDivisor>& divs, std::size_t l);

struct BlockRealization {
    BlockBounds bounds;
    DivisorPartition partition;
    std::vector<Poly> block_polys;  // product of each part's divisors
    RatMatrix transform;            // realization = transform(S, transform)
    LinearSystem system;
};

BlockRealization block_realization(const LinearSystem& s, std::size_t l);
LinearSystem block_companion_with(const LinearSystem& s, std::size_t l);

// Weakly connected groups of states with no edge to or from anything
// outside the group.
std::size_t isolated_state_components(const SysGraph& g);

// Number of blocks in the finest block-diagonal partition of A along its
// diagonal.
std::size_t diagonal_block_count(const RatMatrix& a);

}  // namespace structkit
