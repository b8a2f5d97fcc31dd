#include "structkit/json_io.hpp"

#include <string>

#include "structkit/errors.hpp"

namespace structkit {

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty) {
    if (!j.is_array()) {
        throw ParseError("expected a matrix (array of rows), got " + j.dump());
    }
    if (j.empty()) {
        return RatMatrix(0, cols_if_empty);
    }
    const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
    std::vector<Rational> entries;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw ParseError("matrix row is not an array: " + row.dump());
        }
        if (row.size() != cols) {
            throw ShapeError("ragged matrix: rows of length " + std::to_string(cols) + " and " +
                             std::to_string(row.size()));
        }
        for (const auto& e : row) {
            entries.push_back(rational_from_json(e));
        }
    }
    return RatMatrix(j.size(), cols, std::move(entries));
}

Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(to_json(c));
    }
    return out;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("expected a coefficient array, got " + j.dump());
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        coeffs.push_back(rational_from_json(c));
    }
    return Poly(std::move(coeffs));
}

Json to_json(const LinearSystem& s) {
    return {{"A", to_json(s.A())}, {"B", to_json(s.B())}, {"C", to_json(s.C())}, {"D", to_json(s.D())}};
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw ParseError("expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::size_t first_row_length(const Json& j) {
    return j.is_array() && !j.empty() && j.front().is_array() ? j.front().size() : 0;
}

}  // namespace

LinearSystem system_from_json(const Json& j) {
    const Json& ja = field(j, "A");
    const Json& jb = field(j, "B");
    const Json& jc = field(j, "C");
    const Json& jd = field(j, "D");
    RatMatrix a = matrix_from_json(ja);
    RatMatrix b = matrix_from_json(jb, first_row_length(jd));
    RatMatrix c = matrix_from_json(jc, a.rows());
    RatMatrix d = matrix_from_json(jd, b.cols());
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

namespace {

Json pattern_json(const ZeroPattern& z) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < z.rows; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < z.cols; ++k) {
            row.push_back(z.is_free(i, k) ? "*" : "0");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ZeroPattern pattern_of(const Json& j, std::size_t cols_if_empty) {
    if (!j.is_array()) {
        throw ParseError("expected a pattern (array of rows), got " + j.dump());
    }
    ZeroPattern z{j.size(), j.empty() ? cols_if_empty : first_row_length(j), {}};
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != z.cols) {
            throw ShapeError("ragged or malformed pattern row " + std::to_string(i + 1));
        }
        for (std::size_t k = 0; k < z.cols; ++k) {
            const Json& e = row[k];
            const std::string s = e.is_string() ? e.get<std::string>() : e.dump();
            if (s == "0") {
                z.fixed_zeros.insert({i, k});
            } else if (s != "*") {
                throw ParseError("pattern entries must be \"0\" or \"*\", got " + e.dump());
            }
        }
    }
    return z;
}

}  // namespace

Json to_json(const StructuredSystem& ss) {
    return {{"A", pattern_json(ss.A())}, {"B", pattern_json(ss.B())}, {"C", pattern_json(ss.C())},
            {"D", pattern_json(ss.D())}};
}

StructuredSystem pattern_from_json(const Json& j) {
    const Json& jd = field(j, "D");
    ZeroPattern a = pattern_of(field(j, "A"), 0);
    ZeroPattern b = pattern_of(field(j, "B"), first_row_length(jd));
    ZeroPattern c = pattern_of(field(j, "C"), a.rows);
    ZeroPattern d = pattern_of(jd, b.cols);
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

ParamVector params_from_json(const Json& j) {
    const Json& arr = j.is_object() ? field(j, "p") : j;
    if (!arr.is_array()) {
        throw ParseError("expected a parameter array");
    }
    ParamVector p;
    for (const auto& e : arr) {
        p.push_back(rational_from_json(e));
    }
    return p;
}

Json params_to_json(const ParamVector& p) {
    Json out = Json::array();
    for (const auto& v : p) {
        out.push_back(to_json(v));
    }
    return out;
}

namespace {

Json names(const std::vector<Vertex>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
        out.push_back(v.name());
    }
    return out;
}

Json edge_list(const std::set<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [from, to] : edges) {
        out.push_back({from.name(), to.name()});
    }
    return out;
}

}  // namespace

Json to_json(const SysGraph& g) {
    return {{"n_x", g.n_x}, {"n_u", g.n_u}, {"n_y", g.n_y}, {"vertices", names(g.vertices())},
            {"edges", edge_list(g.edges)}};
}

Json to_json(const CondensedGraph& g) {
    Json comps = Json::array();
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        std::vector<Vertex> members;
        for (auto x : g.components[c]) members.push_back(Vertex::state(x));
        comps.push_back({{"name", Vertex::component(c).name()}, {"members", names(members)}});
    }
    return {{"components", comps}, {"n_u", g.n_u}, {"n_y", g.n_y}, {"vertices", names(g.vertices())},
            {"edges", edge_list(g.edges)}};
}

Json to_json(const VertexMapping& m) {
    Json out = Json::array();
    for (const auto& [from, to] : m.pairs) {
        out.push_back({from.name(), to.name()});
    }
    return out;
}

Json to_json(const GenericityCertificate& c) {
    Json paths = Json::array();
    for (const auto& p : c.paths) paths.push_back(names(p));
    Json cycles = Json::array();
    for (const auto& p : c.cycles) cycles.push_back(names(p));
    Json unreached = Json::array();
    for (auto i : c.unreached) unreached.push_back(Vertex::state(i).name());
    Json uncovered = Json::array();
    for (auto i : c.uncovered) uncovered.push_back(Vertex::state(i).name());
    Json tree = Json::array();
    for (const auto& [from, to] : c.tree) tree.push_back({from.name(), to.name()});
    return {{"holds", c.holds},   {"violated_conditions", c.violated}, {"paths", paths}, {"cycles", cycles},
            {"unreached", unreached}, {"uncovered", uncovered},          {"reachability_tree", tree}};
}

Json to_json(const MinimalityCertificate& c) {
    return {{"holds", c.holds},
            {"violated_conditions", c.violated},
            {"controllability", to_json(c.controllability)},
            {"observability", to_json(c.observability)}};
}

Json to_json(const ElementaryDivisor& d) { return {{"base", to_json(d.base)}, {"exponent", d.exponent}}; }

Json canon_report(const RatMatrix& a) {
    Json inv = Json::array();
    const std::vector<Poly> ips = invariant_polys(a);
    for (const auto& p : ips) inv.push_back(to_json(p));
    Json divs = Json::array();
    for (const auto& d : elementary_divisors_of(ips)) divs.push_back(to_json(d));
    return {{"invariant_polynomials", inv}, {"elementary_divisors", divs}};
}

Json to_json(const BlockRealization& r) {
    Json parts = Json::array();
    for (const auto& part : r.partition) {
        Json p = Json::array();
        for (const auto& d : part) p.push_back(to_json(d));
        parts.push_back(std::move(p));
    }
    Json polys = Json::array();
    for (const auto& p : r.block_polys) polys.push_back(to_json(p));
    return {{"bounds", {{"k", r.bounds.k}, {"d", r.bounds.d}}},
            {"partition", parts},
            {"block_polynomials", polys},
            {"transform", to_json(r.transform)},
            {"system", to_json(r.system)}};
}

}  // namespace structkit
