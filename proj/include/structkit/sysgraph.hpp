#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "structkit/linsys.hpp"

namespace structkit {

enum class VertexKind : std::uint8_t { State, Input, Output, Component };

struct Vertex {
    VertexKind kind = VertexKind::State;
    std::size_t index = 0;  // 0-based

    static Vertex state(std::size_t i) { return {VertexKind::State, i}; }
    static Vertex input(std::size_t i) { return {VertexKind::Input, i}; }
    static Vertex output(std::size_t i) { return {VertexKind::Output, i}; }
    static Vertex component(std::size_t i) { return {VertexKind::Component, i}; }

    // "x1", "u2", "y1", "c3" (1-based)
    [[nodiscard]] std::string name() const;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<Vertex, Vertex>;

struct SysGraph {
    std::size_t n_x = 0;
    std::size_t n_u = 0;
    std::size_t n_y = 0;
    std::set<Edge> edges;

    [[nodiscard]] bool has_edge(const Vertex& from, const Vertex& to) const { return edges.count({from, to}) > 0; }
    // States, then inputs, then outputs.
    [[nodiscard]] std::vector<Vertex> vertices() const;

    friend bool operator==(const SysGraph&, const SysGraph&) = default;
};

// Components hold 0-based state indices, sorted; components are ordered by
// their smallest member. Singleton state components are kept.
struct CondensedGraph {
    std::size_t n_u = 0;
    std::size_t n_y = 0;
    std::vector<std::vector<std::size_t>> components;
    std::set<Edge> edges;

    [[nodiscard]] bool has_edge(const Vertex& from, const Vertex& to) const { return edges.count({from, to}) > 0; }
    [[nodiscard]] std::vector<Vertex> vertices() const;
};

// Source vertex to target vertex, sorted by source.
struct VertexMapping {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    [[nodiscard]] std::optional<Vertex> image(const Vertex& v) const;
    friend bool operator==(const VertexMapping&, const VertexMapping&) = default;
};

SysGraph graph_of(const LinearSystem& s);
CondensedGraph condense(const SysGraph& g);

// Type-restricted isomorphism. With strict_io, input i must map to input i
// and output i to output i.
std::optional<VertexMapping> iso_typed(const SysGraph& g1, const SysGraph& g2, bool strict_io = false);
std::optional<VertexMapping> iso_condensed(const CondensedGraph& g1, const CondensedGraph& g2, bool strict_io = false);
std::optional<VertexMapping> cg_iso(const LinearSystem& s1, const LinearSystem& s2, bool strict_io = false);

// Type-restricted homomorphism by exhaustive search; TooLargeError when a
// vertex type has more than 10 members.
std::optional<VertexMapping> hom_exists(const SysGraph& g1, const SysGraph& g2);

// Maximal trap: states with no path to any output. nullopt when empty.
std::optional<std::vector<std::size_t>> find_trap(const SysGraph& g);
// Maximal unreachable set: states not reachable from any input.
std::optional<std::vector<std::size_t>> find_unreachable(const SysGraph& g);

// Fast criterion for minimal SISO systems with diagonal A and equal state
// counts; NotInClassError otherwise.
bool diag_siso_iso(const LinearSystem& s1, const LinearSystem& s2);

// Fast criterion for CG-isomorphism of minimal SISO systems whose A is in
// second natural normal form with no zero eigenvalue; NotInClassError
// otherwise.
bool second_nnf_cg_iso(const LinearSystem& s1, const LinearSystem& s2);

struct GiClassification {
    enum class Verdict { GuaranteedMember, NotMember, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::optional<LinearSystem> witness;  // set for NotMember
};

// Membership of T in GI(n): guaranteed for monomial matrices (nonzero
// diagonal, permutation, or a product of both); otherwise a seeded search
// for a system whose graph changes under T.
GiClassification gi_classify(const RatMatrix& t, std::uint64_t seed = 1);

std::string to_dot(const SysGraph& g);
std::string to_dot(const CondensedGraph& g);

}  // namespace structkit
