#include "structkit/sysgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "structkit/canon.hpp"
#include "structkit/errors.hpp"
#include "structkit/exactla.hpp"
#include "structkit/rng.hpp"

namespace structkit {

std::string Vertex::name() const {
    const char* prefix = "x";
    switch (kind) {
        case VertexKind::State: prefix = "x"; break;
        case VertexKind::Input: prefix = "u"; break;
        case VertexKind::Output: prefix = "y"; break;
        case VertexKind::Component: prefix = "c"; break;
    }
    return prefix + std::to_string(index + 1);
}

std::vector<Vertex> SysGraph::vertices() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < n_x; ++i) out.push_back(Vertex::state(i));
    for (std::size_t i = 0; i < n_u; ++i) out.push_back(Vertex::input(i));
    for (std::size_t i = 0; i < n_y; ++i) out.push_back(Vertex::output(i));
    return out;
}

std::vector<Vertex> CondensedGraph::vertices() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < components.size(); ++i) out.push_back(Vertex::component(i));
    for (std::size_t i = 0; i < n_u; ++i) out.push_back(Vertex::input(i));
    for (std::size_t i = 0; i < n_y; ++i) out.push_back(Vertex::output(i));
    return out;
}

std::optional<Vertex> VertexMapping::image(const Vertex& v) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), v,
                               [](const std::pair<Vertex, Vertex>& p, const Vertex& key) { return p.first < key; });
    if (it == pairs.end() || it->first != v) {
        return std::nullopt;
    }
    return it->second;
}

SysGraph graph_of(const LinearSystem& s) {
    SysGraph g{s.n_x(), s.n_u(), s.n_y(), {}};
    for (std::size_t i = 0; i < s.n_x(); ++i) {
        for (std::size_t j = 0; j < s.n_x(); ++j) {
            if (!s.A()(i, j).is_zero()) g.edges.insert({Vertex::state(j), Vertex::state(i)});
        }
        for (std::size_t j = 0; j < s.n_u(); ++j) {
            if (!s.B()(i, j).is_zero()) g.edges.insert({Vertex::input(j), Vertex::state(i)});
        }
    }
    for (std::size_t i = 0; i < s.n_y(); ++i) {
        for (std::size_t j = 0; j < s.n_x(); ++j) {
            if (!s.C()(i, j).is_zero()) g.edges.insert({Vertex::state(j), Vertex::output(i)});
        }
        for (std::size_t j = 0; j < s.n_u(); ++j) {
            if (!s.D()(i, j).is_zero()) g.edges.insert({Vertex::input(j), Vertex::output(i)});
        }
    }
    return g;
}

namespace {

// Tarjan's algorithm restricted to the state vertices (inputs have no
// incoming and outputs no outgoing edges, so they are always singletons).
std::vector<std::vector<std::size_t>> state_components(const SysGraph& g) {
    const std::size_t n = g.n_x;
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [from, to] : g.edges) {
        if (from.kind == VertexKind::State && to.kind == VertexKind::State) {
            succ[from.index].push_back(to.index);
        }
    }
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    std::size_t counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : succ[v]) {
            if (index[w] == unvisited) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w = 0;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] == unvisited) {
            visit(v);
        }
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

}  // namespace

CondensedGraph condense(const SysGraph& g) {
    CondensedGraph cg;
    cg.n_u = g.n_u;
    cg.n_y = g.n_y;
    cg.components = state_components(g);
    std::vector<std::size_t> comp_of(g.n_x);
    for (std::size_t c = 0; c < cg.components.size(); ++c) {
        for (auto v : cg.components[c]) {
            comp_of[v] = c;
        }
    }
    auto lift = [&](const Vertex& v) {
        return v.kind == VertexKind::State ? Vertex::component(comp_of[v.index]) : v;
    };
    for (const auto& [from, to] : g.edges) {
        cg.edges.insert({lift(from), lift(to)});
    }
    return cg;
}

namespace {

// Flattened typed digraph for the matching searches. The colour pairs a type
// class with an optional pin (strict input/output order).
struct TypedDigraph {
    std::vector<Vertex> verts;
    std::vector<std::pair<int, std::size_t>> colour;
    std::vector<std::vector<char>> adj;
    std::vector<std::size_t> indeg, outdeg;
};

int type_class(VertexKind k) {
    switch (k) {
        case VertexKind::Input: return 1;
        case VertexKind::Output: return 2;
        default: return 0;
    }
}

TypedDigraph flatten(std::vector<Vertex> verts, const std::set<Edge>& edges, bool strict_io) {
    TypedDigraph t;
    t.verts = std::move(verts);
    const std::size_t n = t.verts.size();
    auto pos = [&](const Vertex& v) {
        return static_cast<std::size_t>(std::lower_bound(t.verts.begin(), t.verts.end(), v) - t.verts.begin());
    };
    std::sort(t.verts.begin(), t.verts.end());
    t.adj.assign(n, std::vector<char>(n, 0));
    t.indeg.assign(n, 0);
    t.outdeg.assign(n, 0);
    for (const auto& [from, to] : edges) {
        const std::size_t a = pos(from);
        const std::size_t b = pos(to);
        t.adj[a][b] = 1;
        ++t.outdeg[a];
        ++t.indeg[b];
    }
    for (const auto& v : t.verts) {
        const int cls = type_class(v.kind);
        t.colour.emplace_back(cls, strict_io && cls != 0 ? v.index + 1 : 0);
    }
    return t;
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Search order: by (type, indegree, outdegree, position).
std::vector<std::size_t> search_order(const TypedDigraph& g) {
    std::vector<std::size_t> order(g.verts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(g.colour[a], g.indeg[a], g.outdeg[a], a) < std::tie(g.colour[b], g.indeg[b], g.outdeg[b], b);
    });
    return order;
}

VertexMapping to_mapping(const TypedDigraph& g1, const TypedDigraph& g2, const std::vector<std::size_t>& phi) {
    VertexMapping m;
    for (std::size_t v = 0; v < phi.size(); ++v) {
        m.pairs.emplace_back(g1.verts[v], g2.verts[phi[v]]);
    }
    return m;
}

std::optional<VertexMapping> isomorphism(const TypedDigraph& g1, const TypedDigraph& g2) {
    const std::size_t n = g1.verts.size();
    if (n != g2.verts.size()) {
        return std::nullopt;
    }
    auto sig = [](const TypedDigraph& g) {
        std::vector<std::tuple<std::pair<int, std::size_t>, std::size_t, std::size_t, char>> s;
        for (std::size_t v = 0; v < g.verts.size(); ++v) {
            s.emplace_back(g.colour[v], g.indeg[v], g.outdeg[v], g.adj[v][v]);
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sig(g1) != sig(g2)) {
        return std::nullopt;
    }
    const std::vector<std::size_t> order = search_order(g1);
    std::vector<std::size_t> phi(n, npos);
    std::vector<bool> used(n, false);

    auto compatible = [&](std::size_t v, std::size_t w, std::size_t depth) {
        if (used[w] || g1.colour[v] != g2.colour[w] || g1.indeg[v] != g2.indeg[w] ||
            g1.outdeg[v] != g2.outdeg[w] || g1.adj[v][v] != g2.adj[w][w]) {
            return false;
        }
        for (std::size_t k = 0; k < depth; ++k) {
            const std::size_t u = order[k];
            if (g1.adj[u][v] != g2.adj[phi[u]][w] || g1.adj[v][u] != g2.adj[w][phi[u]]) {
                return false;
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == n) {
            return true;
        }
        const std::size_t v = order[depth];
        // Same-named vertex first so identical graphs map identically.
        std::vector<std::size_t> candidates;
        const auto same = std::lower_bound(g2.verts.begin(), g2.verts.end(), g1.verts[v]);
        std::size_t same_pos = npos;
        if (same != g2.verts.end() && *same == g1.verts[v]) {
            same_pos = static_cast<std::size_t>(same - g2.verts.begin());
            candidates.push_back(same_pos);
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (w != same_pos) candidates.push_back(w);
        }
        for (auto w : candidates) {
            if (!compatible(v, w, depth)) {
                continue;
            }
            phi[v] = w;
            used[w] = true;
            if (extend(depth + 1)) {
                return true;
            }
            used[w] = false;
            phi[v] = npos;
        }
        return false;
    };
    if (!extend(0)) {
        return std::nullopt;
    }
    return to_mapping(g1, g2, phi);
}

}  // namespace

std::optional<VertexMapping> iso_typed(const SysGraph& g1, const SysGraph& g2, bool strict_io) {
    if (g1.n_x != g2.n_x || g1.n_u != g2.n_u || g1.n_y != g2.n_y) {
        return std::nullopt;
    }
    return isomorphism(flatten(g1.vertices(), g1.edges, strict_io), flatten(g2.vertices(), g2.edges, strict_io));
}

std::optional<VertexMapping> iso_condensed(const CondensedGraph& g1, const CondensedGraph& g2, bool strict_io) {
    if (g1.components.size() != g2.components.size() || g1.n_u != g2.n_u || g1.n_y != g2.n_y) {
        return std::nullopt;
    }
    return isomorphism(flatten(g1.vertices(), g1.edges, strict_io), flatten(g2.vertices(), g2.edges, strict_io));
}

std::optional<VertexMapping> cg_iso(const LinearSystem& s1, const LinearSystem& s2, bool strict_io) {
    return iso_condensed(condense(graph_of(s1)), condense(graph_of(s2)), strict_io);
}

std::optional<VertexMapping> hom_exists(const SysGraph& g1, const SysGraph& g2) {
    constexpr std::size_t limit = 10;
    for (const SysGraph* g : {&g1, &g2}) {
        if (g->n_x > limit || g->n_u > limit || g->n_y > limit) {
            throw TooLargeError("homomorphism search limited to 10 vertices per type");
        }
    }
    const TypedDigraph t1 = flatten(g1.vertices(), g1.edges, false);
    const TypedDigraph t2 = flatten(g2.vertices(), g2.edges, false);
    const std::size_t n = t1.verts.size();
    const std::vector<std::size_t> order = search_order(t1);
    std::vector<std::size_t> phi(n, npos);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == n) {
            return true;
        }
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < t2.verts.size(); ++w) {
            if (t1.colour[v] != t2.colour[w] || (t1.adj[v][v] && !t2.adj[w][w])) {
                continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t u = order[k];
                ok = (!t1.adj[u][v] || t2.adj[phi[u]][w]) && (!t1.adj[v][u] || t2.adj[w][phi[u]]);
            }
            if (!ok) {
                continue;
            }
            phi[v] = w;
            if (extend(depth + 1)) {
                return true;
            }
            phi[v] = npos;
        }
        return false;
    };
    if (!extend(0)) {
        return std::nullopt;
    }
    return to_mapping(t1, t2, phi);
}

namespace {

// States reachable from `seeds` following edges forwards (or backwards).
std::vector<bool> reach_states(const SysGraph& g, VertexKind seed_kind, bool backwards) {
    std::vector<std::vector<std::size_t>> next(g.n_x);
    std::vector<bool> seen(g.n_x, false);
    std::queue<std::size_t> queue;
    for (const auto& [from, to] : g.edges) {
        const Vertex& src = backwards ? to : from;
        const Vertex& dst = backwards ? from : to;
        if (dst.kind != VertexKind::State) {
            continue;
        }
        if (src.kind == VertexKind::State) {
            next[src.index].push_back(dst.index);
        } else if (src.kind == seed_kind && !seen[dst.index]) {
            seen[dst.index] = true;
            queue.push(dst.index);
        }
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop();
        for (auto w : next[v]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    return seen;
}

std::optional<std::vector<std::size_t>> complement(const std::vector<bool>& seen) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) out.push_back(i);
    }
    if (out.empty()) {
        return std::nullopt;
    }
    return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_trap(const SysGraph& g) {
    return complement(reach_states(g, VertexKind::Output, true));
}

std::optional<std::vector<std::size_t>> find_unreachable(const SysGraph& g) {
    return complement(reach_states(g, VertexKind::Input, false));
}

namespace {

void require_minimal_siso(const LinearSystem& s, const char* who) {
    if (s.n_u() != 1 || s.n_y() != 1) {
        throw NotInClassError(std::string(who) + ": system is not SISO");
    }
    if (!is_minimal(s)) {
        throw NotInClassError(std::string(who) + ": system is not minimal");
    }
}

std::size_t nonzero_diagonal(const RatMatrix& a) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a(i, i).is_zero()) ++k;
    }
    return k;
}

}  // namespace

bool diag_siso_iso(const LinearSystem& s1, const LinearSystem& s2) {
    for (const LinearSystem* s : {&s1, &s2}) {
        require_minimal_siso(*s, "diag_siso_iso");
        if (!s->A().is_diagonal()) {
            throw NotInClassError("diag_siso_iso: A is not diagonal");
        }
    }
    if (s1.n_x() != s2.n_x()) {
        throw NotInClassError("diag_siso_iso: state counts differ");
    }
    return s1.D().is_zero() == s2.D().is_zero() && nonzero_diagonal(s1.A()) == nonzero_diagonal(s2.A());
}

namespace {

std::size_t distinct_irreducibles(const LinearSystem& s) {
    const auto blocks = companion_blocks(s.A());
    if (!blocks) {
        throw NotInClassError("second_nnf_cg_iso: A is not block-diagonal with companion blocks");
    }
    std::set<Poly, PolyLess> bases;
    for (const auto& p : *blocks) {
        const Factorization f = poly_factor(p);
        if (f.factors.size() != 1) {
            throw NotInClassError("second_nnf_cg_iso: block polynomial " + p.to_string() +
                                  " is not a power of an irreducible");
        }
        if (f.factors.front().base == Poly::lambda()) {
            throw NotInClassError("second_nnf_cg_iso: A has eigenvalue 0");
        }
        bases.insert(f.factors.front().base);
    }
    return bases.size();
}

}  // namespace

bool second_nnf_cg_iso(const LinearSystem& s1, const LinearSystem& s2) {
    require_minimal_siso(s1, "second_nnf_cg_iso");
    require_minimal_siso(s2, "second_nnf_cg_iso");
    const std::size_t k1 = distinct_irreducibles(s1);
    const std::size_t k2 = distinct_irreducibles(s2);
    return k1 == k2 && s1.D().is_zero() == s2.D().is_zero();
}

namespace {

bool is_monomial(const RatMatrix& t) {
    std::vector<int> per_col(t.cols(), 0);
    for (std::size_t i = 0; i < t.rows(); ++i) {
        int per_row = 0;
        for (std::size_t j = 0; j < t.cols(); ++j) {
            if (!t(i, j).is_zero()) {
                ++per_row;
                ++per_col[j];
            }
        }
        if (per_row != 1) return false;
    }
    return std::all_of(per_col.begin(), per_col.end(), [](int c) { return c == 1; });
}

RatMatrix random_sparse(Rng& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (rng.chance(40)) {
                const long v = rng.uniform(1, 3);
                m(i, j) = rng.chance(50) ? v : -v;
            }
        }
    }
    return m;
}

bool graph_changes(const LinearSystem& s, const RatMatrix& t) {
    return !iso_typed(graph_of(s), graph_of(transform(s, t))).has_value();
}

}  // namespace

GiClassification gi_classify(const RatMatrix& t, std::uint64_t seed) {
    using Verdict = GiClassification::Verdict;
    if (!t.is_square()) {
        throw ShapeError("gi_classify requires a square matrix");
    }
    if (!is_invertible(t)) {
        throw SingularMatrixError("gi_classify: matrix is singular");
    }
    const std::size_t n = t.rows();
    if (is_monomial(t)) {
        bool unit_entries = true;
        for (const auto& e : t.entries()) {
            unit_entries = unit_entries && (e.is_zero() || e == Rational(1));
        }
        std::string reason = t.is_diagonal() ? "nonzero diagonal matrix"
                             : unit_entries  ? "permutation matrix"
                                             : "product of a permutation matrix and a nonzero diagonal matrix";
        return {Verdict::GuaranteedMember, std::move(reason), std::nullopt};
    }
    Rng rng(seed);
    constexpr int trials = 64;
    for (int k = 0; k < trials; ++k) {
        const auto n_u = static_cast<std::size_t>(rng.uniform(1, 2));
        const auto n_y = static_cast<std::size_t>(rng.uniform(1, 2));
        LinearSystem s(random_sparse(rng, n, n), random_sparse(rng, n, n_u), random_sparse(rng, n_y, n),
                       random_sparse(rng, n_y, n_u));
        if (graph_changes(s, t)) {
            return {Verdict::NotMember, "graph changes under the transform (random search)", s};
        }
    }
    // A = diag(1..n) has distinct eigenvalues, so T A T^{-1} is diagonal only
    // for monomial T; its graph then has a state edge that is not a self-loop.
    RatVector diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(Rational(static_cast<long>(i + 1)));
    LinearSystem probe(RatMatrix::diagonal(diag), RatMatrix(n, 1), RatMatrix(1, n), RatMatrix(1, 1));
    if (graph_changes(probe, t)) {
        return {Verdict::NotMember, "graph changes under the transform (diagonal probe)", probe};
    }
    return {Verdict::Unknown, "no witness found", std::nullopt};
}

std::string to_dot(const SysGraph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (const auto& v : g.vertices()) {
        os << "  " << v.name() << ";\n";
    }
    for (const auto& [from, to] : g.edges) {
        os << "  " << from.name() << " -> " << to.name() << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const CondensedGraph& g) {
    std::ostringstream os;
    os << "digraph CG {\n";
    for (const auto& v : g.vertices()) {
        os << "  " << v.name();
        if (v.kind == VertexKind::Component) {
            os << " [label=\"" << v.name() << ":";
            for (auto x : g.components[v.index]) {
                os << ' ' << Vertex::state(x).name();
            }
            os << "\"]";
        }
        os << ";\n";
    }
    for (const auto& [from, to] : g.edges) {
        os << "  " << from.name() << " -> " << to.name() << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace structkit
