#include <doctest.h>

#include "oracles.hpp"
#include "structkit/errors.hpp"
#include "structkit/exactla.hpp"
#include "structkit/structured.hpp"
#include "structkit/sysgraph.hpp"

using namespace structkit;

namespace {

using V = Vertex;

LinearSystem example1() { return {RatMatrix{{1, 2}, {0, 1}}, RatMatrix{{0}, {3}}, RatMatrix{{1, 0}}, RatMatrix{{2}}}; }
LinearSystem siso(long a, long d) { return {RatMatrix{{a}}, RatMatrix{{1}}, RatMatrix{{1}}, RatMatrix{{d}}}; }

bool mapping_is_isomorphism(const SysGraph& g1, const SysGraph& g2, const VertexMapping& m) {
    std::set<Vertex> targets;
    for (const auto& [from, to] : m.pairs) {
        if ((from.kind == VertexKind::State) != (to.kind == VertexKind::State)) return false;
        if (from.kind != VertexKind::State && from.kind != to.kind) return false;
        targets.insert(to);
    }
    if (targets.size() != m.pairs.size() || m.pairs.size() != g1.vertices().size()) return false;
    for (const auto& a : g1.vertices()) {
        for (const auto& b : g1.vertices()) {
            if (g1.has_edge(a, b) != g2.has_edge(*m.image(a), *m.image(b))) return false;
        }
    }
    return true;
}

bool shape_ok(const SysGraph& g) {
    for (const auto& [from, to] : g.edges) {
        if (from.kind == VertexKind::Output || to.kind == VertexKind::Input) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("graph_of example 1") {
    const SysGraph g = graph_of(example1());
    const std::set<Edge> expected{{V::state(0), V::state(0)},  {V::state(1), V::state(0)},
                                  {V::state(1), V::state(1)},  {V::input(0), V::state(1)},
                                  {V::state(0), V::output(0)}, {V::input(0), V::output(0)}};
    CHECK(g.edges == expected);
    CHECK(shape_ok(g));
}

TEST_CASE("graph_of degenerate and complete cases") {
    const LinearSystem zero(RatMatrix(2, 2), RatMatrix(2, 1), RatMatrix(1, 2), RatMatrix(1, 1));
    CHECK(graph_of(zero).edges.empty());
    const SysGraph g = graph_of(siso(1, 1));
    CHECK(g.edges.size() == 4);
    CHECK(g.has_edge(V::input(0), V::output(0)));
}

TEST_CASE("condense") {
    const LinearSystem diag(RatMatrix::diagonal({1, 2, 3}), RatMatrix{{1}, {1}, {1}}, RatMatrix{{1, 1, 1}},
                            RatMatrix{{0}});
    CHECK(condense(graph_of(diag)).components.size() == 3);

    const LinearSystem ocf(RatMatrix{{3, 1}, {-2, 0}}, RatMatrix{{0}, {1}}, RatMatrix{{1, 0}}, RatMatrix{{0}});
    const CondensedGraph c1 = condense(graph_of(ocf));
    REQUIRE(c1.components.size() == 1);
    CHECK(c1.components[0] == std::vector<std::size_t>{0, 1});
    CHECK(c1.has_edge(V::component(0), V::component(0)));

    const CondensedGraph c2 = condense(graph_of(example1()));
    REQUIRE(c2.components.size() == 2);
    CHECK(c2.components[0] == std::vector<std::size_t>{0});
    CHECK(c2.components[1] == std::vector<std::size_t>{1});
    CHECK(c2.has_edge(V::component(1), V::component(0)));
    CHECK_FALSE(c2.has_edge(V::component(0), V::component(1)));
    CHECK(c2.has_edge(V::input(0), V::component(1)));
    CHECK(c2.has_edge(V::component(0), V::output(0)));
    CHECK(c2.has_edge(V::input(0), V::output(0)));
}

TEST_CASE("condensed graph invariants on random systems") {
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        const LinearSystem s = oracle::random_system(rng, static_cast<std::size_t>(rng.uniform(1, 6)), 2, 2, 30);
        const SysGraph g = graph_of(s);
        CHECK(shape_ok(g));
        const CondensedGraph cg = condense(g);
        std::vector<int> hits(s.n_x(), 0);
        for (const auto& c : cg.components) {
            for (auto x : c) ++hits[x];
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        CHECK(cg.vertices().size() <= s.n_x() + s.n_u() + s.n_y());
        // Members of one component reach each other.
        for (const auto& c : cg.components) {
            for (auto a : c) {
                for (auto b : c) {
                    bool ab = (a == b);
                    std::vector<bool> seen(s.n_x(), false);
                    std::vector<std::size_t> stack{a};
                    while (!stack.empty() && !ab) {
                        const std::size_t v = stack.back();
                        stack.pop_back();
                        for (std::size_t w = 0; w < s.n_x(); ++w) {
                            if (g.has_edge(V::state(v), V::state(w)) && !seen[w]) {
                                seen[w] = true;
                                ab = ab || w == b;
                                stack.push_back(w);
                            }
                        }
                    }
                    CHECK(ab);
                }
            }
        }
    }
}

TEST_CASE("iso_typed examples") {
    Rng rng(67);
    const LinearSystem s = oracle::random_system(rng, 4, 2, 1, 50);
    const auto id = iso_typed(graph_of(s), graph_of(s));
    REQUIRE(id);
    for (const auto& [from, to] : id->pairs) CHECK(from == to);

    const std::vector<std::size_t> perm{2, 0, 3, 1};
    const LinearSystem sp = transform(s, RatMatrix::permutation(perm));
    const auto m = iso_typed(graph_of(s), graph_of(sp));
    REQUIRE(m);
    CHECK(mapping_is_isomorphism(graph_of(s), graph_of(sp), *m));

    const LinearSystem nd(RatMatrix{{1, 2}, {0, 3}}, RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    const Diagonalization dg = diagonalize_rational(nd.A());
    CHECK_FALSE(iso_typed(graph_of(nd), graph_of(transform(nd, dg.transform))));
}

TEST_CASE("iso_typed permutes inputs unless strict") {
    const LinearSystem s1(RatMatrix{{1}}, RatMatrix{{1, 0}}, RatMatrix{{1}}, RatMatrix{{0, 0}});
    const LinearSystem s2(RatMatrix{{1}}, RatMatrix{{0, 1}}, RatMatrix{{1}}, RatMatrix{{0, 0}});
    CHECK(iso_typed(graph_of(s1), graph_of(s2)));
    CHECK_FALSE(iso_typed(graph_of(s1), graph_of(s2), true));
    CHECK(iso_typed(graph_of(s1), graph_of(s1), true));
}

TEST_CASE("type-restricted isomorphism is an equivalence relation") {
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
        const LinearSystem s = oracle::random_system(rng, n, 1, 2, 40);
        const LinearSystem s2 = transform(s, RatMatrix::permutation(oracle::random_permutation(rng, n)));
        const LinearSystem s3 = t % 2 ? transform(s2, RatMatrix::permutation(oracle::random_permutation(rng, n)))
                                      : oracle::random_system(rng, n, 1, 2, 40);
        const SysGraph g1 = graph_of(s);
        const SysGraph g2 = graph_of(s2);
        const SysGraph g3 = graph_of(s3);
        CHECK(iso_typed(g1, g1));
        CHECK(iso_typed(g1, g2).has_value() == iso_typed(g2, g1).has_value());
        if (iso_typed(g1, g2) && iso_typed(g2, g3)) CHECK(iso_typed(g1, g3));
        CHECK(iso_typed(g2, g3).has_value() == iso_typed(g3, g2).has_value());
        if (const auto m = iso_typed(g2, g3)) CHECK(mapping_is_isomorphism(g2, g3, *m));
    }
}

TEST_CASE("cg_iso examples") {
    const LinearSystem diag(RatMatrix::diagonal({1, 2}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    const auto m = cg_iso(diag, diag);
    REQUIRE(m);
    for (const auto& [from, to] : m->pairs) CHECK(from == to);

    const LinearSystem nd(RatMatrix{{1, 1}, {1, 1}}, RatMatrix{{1}, {0}}, RatMatrix{{1, 0}}, RatMatrix{{0}});
    const Diagonalization dg = diagonalize_rational(nd.A());
    CHECK_FALSE(cg_iso(nd, transform(nd, dg.transform)));

    const LinearSystem s1(RatMatrix::diagonal({2, 3}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    const LinearSystem s2(RatMatrix::diagonal({4, 5}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    CHECK(second_nnf_cg_iso(s1, s2));
    CHECK(cg_iso(s1, s2));
}

TEST_CASE("CG-isomorphism does not require equal component sizes") {
    // One 2-state cycle versus one singleton with a self-loop.
    const LinearSystem big(RatMatrix{{0, 1}, {1, 0}}, RatMatrix{{1}, {0}}, RatMatrix{{1, 0}}, RatMatrix{{0}});
    const LinearSystem small(RatMatrix{{1}}, RatMatrix{{1}}, RatMatrix{{1}}, RatMatrix{{0}});
    CHECK(cg_iso(big, small));
    CHECK_FALSE(iso_typed(graph_of(big), graph_of(small)));
}

TEST_CASE("homomorphism examples") {
    const SysGraph g1 = graph_of(siso(1, 1));
    const SysGraph g2 = graph_of(siso(0, 0));
    const LinearSystem s3(RatMatrix{{0}}, RatMatrix{{1, 1}}, RatMatrix{{1}, {1}}, RatMatrix(2, 2));
    const SysGraph g3 = graph_of(s3);
    Rng rng(73);
    for (int t = 0; t < 10; ++t) {
        const LinearSystem s = oracle::random_system(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 1, 1, 50);
        CHECK(hom_exists(graph_of(s), g1));
    }
    CHECK_FALSE(hom_exists(g1, g2));
    CHECK(hom_exists(g3, g2));
    CHECK(hom_exists(g2, g3));
    const LinearSystem huge(RatMatrix(11, 11), RatMatrix(11, 1), RatMatrix(1, 11), RatMatrix(1, 1));
    CHECK_THROWS_AS(hom_exists(graph_of(huge), g1), TooLargeError);
}

TEST_CASE("traps and unreachable sets") {
    const LinearSystem trap(RatMatrix::identity(2), RatMatrix{{1}, {1}}, RatMatrix{{1, 0}}, RatMatrix{{0}});
    CHECK(find_trap(graph_of(trap)) == std::vector<std::size_t>{1});
    const LinearSystem worked(RatMatrix{{0, -2, 0, 0}, {1, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                             RatMatrix::identity(4), RatMatrix::identity(4), RatMatrix(4, 4));
    CHECK_FALSE(find_trap(graph_of(worked)));
    CHECK_FALSE(find_unreachable(graph_of(worked)));
    const LinearSystem chain(RatMatrix{{0, 1}, {0, 0}}, RatMatrix{{0}, {0}}, RatMatrix{{1, 0}}, RatMatrix{{0}});
    CHECK_FALSE(find_trap(graph_of(chain)));

    const LinearSystem unr(RatMatrix::identity(2), RatMatrix{{1}, {0}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    CHECK(find_unreachable(graph_of(unr)) == std::vector<std::size_t>{1});
    const LinearSystem chain2(RatMatrix{{0, 0}, {1, 0}}, RatMatrix{{1}, {0}}, RatMatrix{{0, 0}}, RatMatrix{{0}});
    CHECK_FALSE(find_unreachable(graph_of(chain2)));
}

TEST_CASE("diag_siso_iso") {
    CHECK(diag_siso_iso(siso(2, 0), siso(3, 0)));
    CHECK_FALSE(diag_siso_iso(siso(2, 0), siso(3, 1)));
    const LinearSystem a(RatMatrix::diagonal({1, 0}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    const LinearSystem b(RatMatrix::diagonal({2, 3}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    CHECK_FALSE(diag_siso_iso(a, b));
    CHECK(diag_siso_iso(a, b) == iso_typed(graph_of(a), graph_of(b)).has_value());
    const LinearSystem not_min(RatMatrix::diagonal({1, 1}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    CHECK_THROWS_AS(diag_siso_iso(not_min, b), NotInClassError);
    CHECK_THROWS_AS(diag_siso_iso(example1(), example1()), NotInClassError);
    CHECK_THROWS_AS(diag_siso_iso(siso(2, 0), b), NotInClassError);
}

TEST_CASE("second_nnf_cg_iso") {
    const LinearSystem one(RatMatrix{{2}}, RatMatrix{{1}}, RatMatrix{{1}}, RatMatrix{{0}});
    const LinearSystem two(RatMatrix::diagonal({2, 3}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    CHECK_FALSE(second_nnf_cg_iso(one, two));
    CHECK(second_nnf_cg_iso(one, two) == cg_iso(one, two).has_value());
    const LinearSystem two_d(RatMatrix::diagonal({2, 3}), RatMatrix{{1}, {1}}, RatMatrix{{1, 1}}, RatMatrix{{1}});
    CHECK_FALSE(second_nnf_cg_iso(two, two_d));
    // Companion of (λ-2)^2 is a single Hamiltonian block.
    const LinearSystem sq(RatMatrix{{0, -4}, {1, 4}}, RatMatrix{{1}, {0}}, RatMatrix{{0, 1}}, RatMatrix{{0}});
    REQUIRE(is_minimal(sq));
    CHECK(second_nnf_cg_iso(sq, one));
    CHECK(cg_iso(sq, one));
    const LinearSystem zero_eig(RatMatrix{{0}}, RatMatrix{{1}}, RatMatrix{{1}}, RatMatrix{{0}});
    CHECK_THROWS_AS(second_nnf_cg_iso(zero_eig, one), NotInClassError);
    const LinearSystem not_nnf(RatMatrix{{0, -2}, {1, 3}}, RatMatrix{{1}, {0}}, RatMatrix{{0, 1}}, RatMatrix{{0}});
    CHECK_THROWS_AS(second_nnf_cg_iso(not_nnf, one), NotInClassError);
}

TEST_CASE("gi_classify") {
    CHECK(gi_classify(RatMatrix::diagonal({3, -2})).verdict == GiClassification::Verdict::GuaranteedMember);
    CHECK(gi_classify(RatMatrix::permutation({1, 0})).verdict == GiClassification::Verdict::GuaranteedMember);
    CHECK(gi_classify(RatMatrix{{0, 2}, {-1, 0}}).verdict == GiClassification::Verdict::GuaranteedMember);
    const RatMatrix t{{1, 1}, {0, 1}};
    const GiClassification c = gi_classify(t, 7);
    REQUIRE(c.verdict == GiClassification::Verdict::NotMember);
    REQUIRE(c.witness);
    CHECK_FALSE(iso_typed(graph_of(*c.witness), graph_of(transform(*c.witness, t))));
    CHECK(gi_classify(t, 7).witness == c.witness);
    CHECK_THROWS_AS(gi_classify(RatMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
}

TEST_CASE("GI group laws on certified members") {
    Rng rng(79);
    for (int t = 0; t < 10; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
        RatVector d;
        for (std::size_t i = 0; i < n; ++i) d.emplace_back(rng.uniform(1, 4) * (rng.chance(50) ? 1 : -1));
        const RatMatrix dm = RatMatrix::diagonal(d);
        const RatMatrix pm = RatMatrix::permutation(oracle::random_permutation(rng, n));
        for (const RatMatrix& m : {dm * pm, pm * dm, inverse(dm), inverse(pm), inverse(dm * pm)}) {
            CHECK(gi_classify(m).verdict == GiClassification::Verdict::GuaranteedMember);
            for (int k = 0; k < 20; ++k) {
                const LinearSystem s = oracle::random_system(rng, n, 1, 1, 50);
                CHECK(iso_typed(graph_of(s), graph_of(transform(s, m))));
            }
        }
    }
}

TEST_CASE("dual graph is the reversed graph with inputs and outputs swapped") {
    Rng rng(83);
    for (int t = 0; t < 30; ++t) {
        const LinearSystem s = oracle::random_system(rng, 3, 2, 1, 50);
        const StructuredSystem ss = structured_from(s);
        const SysGraph g = graph_of_structured(ss);
        const SysGraph gd = graph_of_structured(dual_structured(ss));
        auto swap = [](const Vertex& v) {
            if (v.kind == VertexKind::Input) return Vertex::output(v.index);
            if (v.kind == VertexKind::Output) return Vertex::input(v.index);
            return v;
        };
        std::set<Edge> mapped;
        for (const auto& [from, to] : g.edges) mapped.insert({swap(to), swap(from)});
        CHECK(mapped == gd.edges);
    }
}

TEST_CASE("DOT export") {
    const std::string dot = to_dot(graph_of(example1()));
    CHECK(dot.find("u1 -> x2;") != std::string::npos);
    CHECK(dot.find("x2 -> x1;") != std::string::npos);
    const LinearSystem ocf(RatMatrix{{3, 1}, {-2, 0}}, RatMatrix{{0}, {1}}, RatMatrix{{1, 0}}, RatMatrix{{0}});
    const std::string cdot = to_dot(condense(graph_of(ocf)));
    CHECK(cdot.find("c1 [label=\"c1: x1 x2\"];") != std::string::npos);
    CHECK(cdot.find("c1 -> y1;") != std::string::npos);
}
