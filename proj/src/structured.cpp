#include "structkit/structured.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

#include "structkit/errors.hpp"
#include "structkit/rng.hpp"

namespace structkit {

ZeroPattern ZeroPattern::all_free(std::size_t rows, std::size_t cols) { return {rows, cols, {}}; }

ZeroPattern ZeroPattern::all_fixed(std::size_t rows, std::size_t cols) {
    ZeroPattern z{rows, cols, {}};
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            z.fixed_zeros.insert({i, j});
        }
    }
    return z;
}

ZeroPattern ZeroPattern::of(const RatMatrix& m) {
    ZeroPattern z{m.rows(), m.cols(), {}};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) z.fixed_zeros.insert({i, j});
        }
    }
    return z;
}

std::vector<std::pair<std::size_t, std::size_t>> ZeroPattern::free_positions() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (is_free(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

ZeroPattern ZeroPattern::transpose() const {
    ZeroPattern z{cols, rows, {}};
    for (const auto& [i, j] : fixed_zeros) {
        z.fixed_zeros.insert({j, i});
    }
    return z;
}

StructuredSystem::StructuredSystem(ZeroPattern a, ZeroPattern b, ZeroPattern c, ZeroPattern d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    for (const ZeroPattern* z : {&a_, &b_, &c_, &d_}) {
        for (const auto& [i, j] : z->fixed_zeros) {
            if (i >= z->rows || j >= z->cols) {
                throw ShapeError("fixed zero position out of range");
            }
        }
    }
    const std::size_t n = a_.rows;
    if (a_.cols != n || b_.rows != n || c_.cols != n || d_.rows != c_.rows || d_.cols != b_.cols) {
        throw ShapeError("structured system pattern dimensions are incompatible");
    }
}

std::size_t StructuredSystem::parameter_count() const {
    return a_.free_count() + b_.free_count() + c_.free_count() + d_.free_count();
}

LinearSystem instantiate(const StructuredSystem& ss, const ParamVector& p) {
    if (p.size() != ss.parameter_count()) {
        throw ShapeError("parameter vector has length " + std::to_string(p.size()) + ", expected " +
                         std::to_string(ss.parameter_count()));
    }
    std::size_t next = 0;
    auto fill = [&](const ZeroPattern& z) {
        RatMatrix m(z.rows, z.cols);
        for (const auto& [i, j] : z.free_positions()) {
            m(i, j) = p[next++];
        }
        return m;
    };
    RatMatrix a = fill(ss.A());
    RatMatrix b = fill(ss.B());
    RatMatrix c = fill(ss.C());
    RatMatrix d = fill(ss.D());
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

ParamVector parameters_of(const StructuredSystem& ss, const LinearSystem& s) {
    ParamVector p;
    auto take = [&](const ZeroPattern& z, const RatMatrix& m) {
        if (m.rows() != z.rows || m.cols() != z.cols) {
            throw ShapeError("system does not match the pattern dimensions");
        }
        for (const auto& [i, j] : z.free_positions()) {
            p.push_back(m(i, j));
        }
    };
    take(ss.A(), s.A());
    take(ss.B(), s.B());
    take(ss.C(), s.C());
    take(ss.D(), s.D());
    return p;
}

SysGraph graph_of_structured(const StructuredSystem& ss) {
    return graph_of(instantiate(ss, ParamVector(ss.parameter_count(), Rational(1))));
}

StructuredSystem structured_from(const LinearSystem& s) {
    return {ZeroPattern::of(s.A()), ZeroPattern::of(s.B()), ZeroPattern::of(s.C()), ZeroPattern::of(s.D())};
}

StructuredSystem dual_structured(const StructuredSystem& ss) {
    return {ss.A().transpose(), ss.C().transpose(), ss.B().transpose(), ss.D().transpose()};
}

ParamVector dual_parameters(const StructuredSystem& ss, const ParamVector& p) {
    return parameters_of(dual_structured(ss), dual(instantiate(ss, p)));
}

namespace {

// Hopcroft-Karp on a bipartite graph given by left adjacency lists.
class HopcroftKarp {
public:
    HopcroftKarp(std::size_t n_left, std::size_t n_right, std::vector<std::vector<std::size_t>> adj)
        : adj_(std::move(adj)), match_left_(n_left, none), match_right_(n_right, none), dist_(n_left) {}

    std::size_t run() {
        std::size_t size = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < adj_.size(); ++u) {
                if (match_left_[u] == none && dfs(u)) ++size;
            }
        }
        return size;
    }

    [[nodiscard]] const std::vector<std::size_t>& match_right() const { return match_right_; }
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

private:
    bool bfs() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            dist_[u] = match_left_[u] == none ? 0 : none;
            if (dist_[u] == 0) q.push(u);
        }
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (auto v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == none) {
                    found = true;
                } else if (dist_[w] == none) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t u) {
        for (auto v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == none || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = none;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> dist_;
};

}  // namespace

GenericityCertificate generic_controllable(const StructuredSystem& ss) {
    const std::size_t n = ss.n_x();
    const std::size_t m = ss.n_u();
    GenericityCertificate cert;

    // Condition 1: every state reachable from some input.
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (ss.B().is_free(i, j) && !seen[i]) {
                seen[i] = true;
                cert.tree.push_back({Vertex::input(j), Vertex::state(i)});
                q.push(i);
            }
        }
    }
    while (!q.empty()) {
        const std::size_t j = q.front();
        q.pop();
        for (std::size_t i = 0; i < n; ++i) {
            if (ss.A().is_free(i, j) && !seen[i]) {
                seen[i] = true;
                cert.tree.push_back({Vertex::state(j), Vertex::state(i)});
                q.push(i);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i]) cert.unreached.push_back(i);
    }

    // Condition 2: sources (states 0..n-1, inputs n..n+m-1) matched to
    // distinct state targets; a matching saturating every target is a
    // disjoint cover by U-rooted paths and cycles.
    std::vector<std::vector<std::size_t>> adj(n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (ss.A().is_free(i, j)) adj[j].push_back(i);
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (ss.B().is_free(i, j)) adj[n + j].push_back(i);
        }
    }
    HopcroftKarp hk(n + m, n, std::move(adj));
    const std::size_t matched = hk.run();
    const auto& pred = hk.match_right();
    if (matched == n) {
        std::vector<std::size_t> succ(n + m, HopcroftKarp::none);
        for (std::size_t i = 0; i < n; ++i) {
            succ[pred[i]] = i;
        }
        std::vector<bool> used(n, false);
        for (std::size_t j = 0; j < m; ++j) {
            if (succ[n + j] == HopcroftKarp::none) continue;
            std::vector<Vertex> path{Vertex::input(j)};
            for (std::size_t v = succ[n + j]; v != HopcroftKarp::none; v = succ[v]) {
                path.push_back(Vertex::state(v));
                used[v] = true;
            }
            cert.paths.push_back(std::move(path));
        }
        for (std::size_t s = 0; s < n; ++s) {
            if (used[s]) continue;
            std::vector<Vertex> cycle{Vertex::state(s)};
            used[s] = true;
            for (std::size_t v = succ[s]; v != s; v = succ[v]) {
                cycle.push_back(Vertex::state(v));
                used[v] = true;
            }
            cycle.push_back(Vertex::state(s));
            cert.cycles.push_back(std::move(cycle));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (pred[i] == HopcroftKarp::none) cert.uncovered.push_back(i);
        }
    }
    if (!cert.unreached.empty()) cert.violated.push_back(1);
    if (matched != n) cert.violated.push_back(2);
    cert.holds = cert.violated.empty();
    return cert;
}

namespace {

// Dual graph to primal: inputs become outputs and edges reverse.
Vertex to_primal(const Vertex& v) { return v.kind == VertexKind::Input ? Vertex::output(v.index) : v; }

}  // namespace

GenericityCertificate generic_observable(const StructuredSystem& ss) {
    GenericityCertificate cert = generic_controllable(dual_structured(ss));
    for (auto& c : cert.violated) {
        c += 2;
    }
    for (auto* family : {&cert.paths, &cert.cycles}) {
        for (auto& path : *family) {
            std::reverse(path.begin(), path.end());
            for (auto& v : path) v = to_primal(v);
        }
    }
    for (auto& [from, to] : cert.tree) {
        const Vertex f = to_primal(from);
        from = to;
        to = f;
    }
    return cert;
}

MinimalityCertificate generic_minimal(const StructuredSystem& ss) {
    MinimalityCertificate m;
    m.controllability = generic_controllable(ss);
    m.observability = generic_observable(ss);
    m.violated = m.controllability.violated;
    m.violated.insert(m.violated.end(), m.observability.violated.begin(), m.observability.violated.end());
    m.holds = m.violated.empty();
    return m;
}

OracleResult sample_minimality_oracle(const StructuredSystem& ss, std::size_t trials, std::uint64_t seed,
                                      unsigned jobs) {
    if (trials == 0) {
        throw DomainError("oracle needs at least one trial");
    }
    const std::size_t k = ss.parameter_count();
    std::vector<ParamVector> samples(trials);
    std::vector<char> minimal(trials, 0);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < trials; t += stride) {
            Rng rng(derive_seed(seed, t));
            ParamVector p;
            p.reserve(k);
            for (std::size_t i = 0; i < k; ++i) {
                p.emplace_back(rng.uniform(-99, 99));
            }
            minimal[t] = is_minimal(instantiate(ss, p)) ? 1 : 0;
            samples[t] = std::move(p);
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(trials)));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(work, j, jobs);
        }
        for (auto& th : pool) th.join();
    }
    OracleResult r;
    r.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        if (minimal[t]) {
            ++r.minimal;
        } else {
            r.failures.emplace_back(t, std::move(samples[t]));
        }
    }
    return r;
}

ParamVector non_identifiability_witness(const StructuredSystem& ss, const ParamVector& p) {
    if (p.size() != ss.parameter_count()) {
        throw ShapeError("parameter vector has length " + std::to_string(p.size()) + ", expected " +
                         std::to_string(ss.parameter_count()));
    }
    const std::size_t c0 = ss.offset_c();
    const std::size_t c1 = ss.offset_d();
    if (c0 == c1) {
        throw NotApplicableError("every entry of C is a fixed zero");
    }
    if (std::all_of(p.begin() + static_cast<std::ptrdiff_t>(c0), p.begin() + static_cast<std::ptrdiff_t>(c1),
                    [](const Rational& v) { return v.is_zero(); })) {
        throw ExceptionalParameterError("every free C parameter is zero; the scaling witness is degenerate");
    }
    ParamVector q = p;
    for (std::size_t i = ss.offset_b(); i < c0; ++i) q[i] *= Rational(2);
    for (std::size_t i = c0; i < c1; ++i) q[i] /= Rational(2);
    return q;
}

MinimalityCertificate minimality_necessary_check(const LinearSystem& s) {
    MinimalityCertificate m = generic_minimal(structured_from(s));
    if (!m.holds && is_minimal(s)) {
        throw std::logic_error("minimal system violates the graph conditions");
    }
    return m;
}

}  // namespace structkit
