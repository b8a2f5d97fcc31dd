#include "structkit/blockdecomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "structkit/errors.hpp"
#include "structkit/exactla.hpp"

namespace structkit {

BlockBounds block_bounds_of(const std::vector<ElementaryDivisor>& divs) {
    std::map<Poly, std::size_t, PolyLess> per_base;
    for (const auto& d : divs) {
        ++per_base[d.base];
    }
    BlockBounds b;
    b.d = divs.size();
    for (const auto& [base, count] : per_base) {
        b.k = std::max(b.k, count);
    }
    return b;
}

BlockBounds block_bounds(const RatMatrix& a) { return block_bounds_of(elementary_divisors(a)); }

DivisorPartition partition_divisors(const std::vector<ElementaryDivisor>& divs, std::size_t l) {
    const BlockBounds b = block_bounds_of(divs);
    if (l < b.k || l > b.d || l == 0) {
        throw InfeasibleCountError("block count " + std::to_string(l) + " outside feasible range [" +
                                   std::to_string(b.k) + ", " + std::to_string(b.d) + "]");
    }
    std::vector<ElementaryDivisor> sorted = divs;
    sort_divisors(sorted);
    // Part j collects the j-th divisor (largest exponent first) of each base.
    DivisorPartition parts(b.k);
    std::size_t j = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        j = (i > 0 && sorted[i].base == sorted[i - 1].base) ? j + 1 : 0;
        parts[j].push_back(sorted[i]);
    }
    // Each split moves one divisor out of a part with two or more into a new
    // singleton part.
    while (parts.size() < l) {
        auto it = std::find_if(parts.begin(), parts.end(), [](const auto& p) { return p.size() >= 2; });
        ElementaryDivisor moved = it->back();
        it->pop_back();
        parts.push_back({std::move(moved)});
    }
    return parts;
}

BlockRealization block_realization(const LinearSystem& s, std::size_t l) {
    const std::vector<ElementaryDivisor> divs = elementary_divisors(s.A());
    BlockRealization r;
    r.bounds = block_bounds_of(divs);
    r.partition = partition_divisors(divs, l);
    std::vector<RatMatrix> blocks;
    for (const auto& part : r.partition) {
        Poly p = Poly::constant(1);
        for (const auto& d : part) {
            p *= d.power();
        }
        blocks.push_back(companion(p));
        r.block_polys.push_back(std::move(p));
    }
    const RatMatrix target = RatMatrix::block_diagonal(blocks);
    if (target == s.A()) {
        r.transform = RatMatrix::identity(s.n_x());
    } else {
        auto t = similarity_transform(s.A(), target);
        if (!t) {
            throw std::logic_error("block realization not similar to A");
        }
        r.transform = std::move(*t);
    }
    r.system = transform(s, r.transform);
    if (r.system.A() != target) {
        throw std::logic_error("block realization transform check failed");
    }
    return r;
}

LinearSystem block_companion_with(const LinearSystem& s, std::size_t l) { return block_realization(s, l).system; }

std::size_t isolated_state_components(const SysGraph& g) {
    std::vector<std::size_t> parent(g.n_x);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    std::vector<bool> touches_io(g.n_x, false);
    for (const auto& [from, to] : g.edges) {
        const bool fs = from.kind == VertexKind::State;
        const bool ts = to.kind == VertexKind::State;
        if (fs && ts) {
            parent[find(from.index)] = find(to.index);
        } else if (fs) {
            touches_io[from.index] = true;
        } else if (ts) {
            touches_io[to.index] = true;
        }
    }
    std::vector<bool> tainted(g.n_x, false);
    for (std::size_t v = 0; v < g.n_x; ++v) {
        if (touches_io[v]) tainted[find(v)] = true;
    }
    std::size_t count = 0;
    for (std::size_t v = 0; v < g.n_x; ++v) {
        if (find(v) == v && !tainted[v]) ++count;
    }
    return count;
}

std::size_t diagonal_block_count(const RatMatrix& a) {
    if (!a.is_square()) {
        throw ShapeError("diagonal_block_count requires a square matrix");
    }
    std::size_t blocks = 0;
    std::size_t reach = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_zero() || !a(j, i).is_zero()) {
                reach = std::max(reach, j);
            }
        }
        reach = std::max(reach, i);
        if (reach == i) ++blocks;
    }
    return blocks;
}

}  // namespace structkit
