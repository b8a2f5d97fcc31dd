#include <doctest.h>

#include "oracles.hpp"
#include "structkit/errors.hpp"
#include "structkit/exactla.hpp"
#include "structkit/structured.hpp"

using namespace structkit;

namespace {

ZeroPattern pattern(std::size_t r, std::size_t c, std::initializer_list<std::pair<std::size_t, std::size_t>> zeros) {
    ZeroPattern z{r, c, {}};
    for (const auto& p : zeros) z.fixed_zeros.insert(p);
    return z;
}

LinearSystem example1() { return {RatMatrix{{1, 2}, {0, 1}}, RatMatrix{{0}, {3}}, RatMatrix{{1, 0}}, RatMatrix{{2}}}; }

StructuredSystem random_pattern(Rng& rng, std::size_t n, std::size_t m, std::size_t p, unsigned density) {
    auto pat = [&](std::size_t r, std::size_t c) {
        ZeroPattern z{r, c, {}};
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                if (!rng.chance(density)) z.fixed_zeros.insert({i, j});
            }
        }
        return z;
    };
    ZeroPattern a = pat(n, n);
    ZeroPattern b = pat(n, m);
    ZeroPattern c = pat(p, n);
    ZeroPattern d = pat(p, m);
    return {a, b, c, d};
}

// Walks a controllability certificate and checks it is a disjoint cover
// made of admissible edges.
bool certificate_valid(const StructuredSystem& ss, const GenericityCertificate& c, bool observability) {
    const SysGraph g = graph_of_structured(ss);
    std::vector<int> hits(ss.n_x(), 0);
    auto walk = [&](const std::vector<Vertex>& seq, bool cycle) {
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (!g.has_edge(seq[i], seq[i + 1])) return false;
        }
        for (std::size_t i = 0; i + (cycle ? 1 : 0) < seq.size(); ++i) {
            if (seq[i].kind == VertexKind::State) ++hits[seq[i].index];
        }
        return true;
    };
    for (const auto& p : c.paths) {
        if (!walk(p, false)) return false;
        if (observability ? p.back().kind != VertexKind::Output : p.front().kind != VertexKind::Input) return false;
    }
    for (const auto& cy : c.cycles) {
        if (cy.front() != cy.back() || !walk(cy, true)) return false;
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace

TEST_CASE("instantiate fills free entries lexicographically") {
    const StructuredSystem ss(pattern(2, 2, {{0, 1}}), ZeroPattern::all_fixed(2, 1), ZeroPattern::all_fixed(1, 2),
                              ZeroPattern::all_fixed(1, 1));
    const LinearSystem s = instantiate(ss, {5, 7, 9});
    CHECK(s.A() == RatMatrix{{5, 0}, {7, 9}});
    CHECK(instantiate(ss, {0, 0, 0}).A().is_zero());
    CHECK_THROWS_AS(instantiate(ss, {1, 2}), ShapeError);
    const StructuredSystem full(ZeroPattern::all_free(2, 2), ZeroPattern::all_free(2, 1), ZeroPattern::all_free(1, 2),
                                ZeroPattern::all_free(1, 1));
    const SysGraph g = graph_of_structured(full);
    CHECK(g.edges.size() == 4 + 2 + 2 + 1);
    const StructuredSystem none(ZeroPattern::all_fixed(2, 2), ZeroPattern::all_fixed(2, 1), ZeroPattern::all_fixed(1, 2),
                                ZeroPattern::all_fixed(1, 1));
    CHECK(graph_of_structured(none).edges.empty());
    CHECK(none.parameter_count() == 0);
}

TEST_CASE("structured_from") {
    const StructuredSystem ss = structured_from(example1());
    CHECK(ss.A().fixed_zeros == std::set<std::pair<std::size_t, std::size_t>>{{1, 0}});
    CHECK(ss.B().fixed_zeros == std::set<std::pair<std::size_t, std::size_t>>{{0, 0}});
    CHECK(ss.C().fixed_zeros == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}});
    CHECK(ss.D().fixed_zeros.empty());
    CHECK(graph_of_structured(ss) == graph_of(example1()));
    CHECK(instantiate(ss, parameters_of(ss, example1())) == example1());
    const LinearSystem zero(RatMatrix(2, 2), RatMatrix(2, 1), RatMatrix(1, 2), RatMatrix(1, 1));
    CHECK(structured_from(zero).parameter_count() == 0);
}

TEST_CASE("dual_structured") {
    const StructuredSystem ss(pattern(2, 2, {{0, 1}}), pattern(2, 1, {{1, 0}}), ZeroPattern::all_free(1, 2),
                              ZeroPattern::all_fixed(1, 1));
    const StructuredSystem d = dual_structured(ss);
    CHECK(d.A().fixed_zeros == std::set<std::pair<std::size_t, std::size_t>>{{1, 0}});
    CHECK(d.B() == ss.C().transpose());
    CHECK(dual_structured(d) == ss);
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
        const StructuredSystem r = random_pattern(rng, 3, 2, 1, 50);
        ParamVector p;
        for (std::size_t i = 0; i < r.parameter_count(); ++i) p.emplace_back(rng.uniform(-9, 9));
        const ParamVector q = dual_parameters(r, p);
        CHECK(instantiate(dual_structured(r), q) == dual(instantiate(r, p)));
        std::vector<Rational> ps = p;
        std::vector<Rational> qs = q;
        std::sort(ps.begin(), ps.end());
        std::sort(qs.begin(), qs.end());
        CHECK(ps == qs);
    }
}

TEST_CASE("generic controllability examples") {
    const StructuredSystem one(ZeroPattern::all_fixed(1, 1), ZeroPattern::all_free(1, 1), ZeroPattern::all_fixed(1, 1),
                               ZeroPattern::all_fixed(1, 1));
    CHECK(generic_controllable(one).holds);

    const StructuredSystem unreach(pattern(2, 2, {{1, 0}, {1, 1}}), pattern(2, 1, {{1, 0}}), ZeroPattern::all_free(1, 2),
                                   ZeroPattern::all_free(1, 1));
    const auto cu = generic_controllable(unreach);
    CHECK_FALSE(cu.holds);
    CHECK(std::find(cu.violated.begin(), cu.violated.end(), 1) != cu.violated.end());
    CHECK(cu.unreached == std::vector<std::size_t>{1});

    const StructuredSystem chain(pattern(2, 2, {{0, 0}, {0, 1}, {1, 1}}), pattern(2, 1, {{1, 0}}),
                                 ZeroPattern::all_fixed(1, 2), ZeroPattern::all_fixed(1, 1));
    const auto cc = generic_controllable(chain);
    CHECK(cc.holds);
    REQUIRE(cc.paths.size() == 1);
    CHECK(cc.paths[0] == std::vector<Vertex>{Vertex::input(0), Vertex::state(0), Vertex::state(1)});
    CHECK(cc.cycles.empty());
    CHECK(oracle::cover_u_rooted(chain));

    // Condition 1 holds but the states compete for a single predecessor.
    const StructuredSystem dilation(ZeroPattern::all_fixed(2, 2), ZeroPattern::all_free(2, 1),
                                    ZeroPattern::all_free(1, 2), ZeroPattern::all_fixed(1, 1));
    const auto cd = generic_controllable(dilation);
    CHECK_FALSE(cd.holds);
    CHECK(cd.violated == std::vector<int>{2});
}

TEST_CASE("generic observability examples") {
    const StructuredSystem one(ZeroPattern::all_fixed(1, 1), ZeroPattern::all_fixed(1, 1), ZeroPattern::all_free(1, 1),
                               ZeroPattern::all_fixed(1, 1));
    CHECK(generic_observable(one).holds);
    const StructuredSystem trap(pattern(2, 2, {{0, 1}, {1, 1}}), ZeroPattern::all_free(2, 1), pattern(1, 2, {{0, 1}}),
                                ZeroPattern::all_free(1, 1));
    const auto ct = generic_observable(trap);
    CHECK_FALSE(ct.holds);
    CHECK(std::find(ct.violated.begin(), ct.violated.end(), 3) != ct.violated.end());
    // Chain x2 -> x1 -> y.
    const StructuredSystem chain(pattern(2, 2, {{0, 0}, {1, 0}, {1, 1}}), ZeroPattern::all_fixed(2, 1),
                                 pattern(1, 2, {{0, 1}}), ZeroPattern::all_fixed(1, 1));
    const auto cc = generic_observable(chain);
    CHECK(cc.holds);
    REQUIRE(cc.paths.size() == 1);
    CHECK(cc.paths[0] == std::vector<Vertex>{Vertex::state(1), Vertex::state(0), Vertex::output(0)});
}

TEST_CASE("matching certificates agree with exhaustive path/cycle enumeration") {
    Rng rng(109);
    for (int t = 0; t < 400; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto m = static_cast<std::size_t>(rng.uniform(1, 2));
        const auto p = static_cast<std::size_t>(rng.uniform(1, 2));
        const StructuredSystem ss = random_pattern(rng, n, m, p, static_cast<unsigned>(rng.uniform(20, 70)));
        const auto c = generic_controllable(ss);
        const auto o = generic_observable(ss);
        const bool c2 = std::find(c.violated.begin(), c.violated.end(), 2) == c.violated.end();
        const bool o4 = std::find(o.violated.begin(), o.violated.end(), 4) == o.violated.end();
        CHECK(c2 == oracle::cover_u_rooted(ss));
        CHECK(o4 == oracle::cover_y_topped(ss));
        CHECK(c.unreached.empty() == oracle::all_reached_from_inputs(ss));
        CHECK(o.unreached.empty() == oracle::all_reach_outputs(ss));
        if (c2) CHECK(certificate_valid(ss, c, false));
        if (o4) CHECK(certificate_valid(ss, o, true));
        CHECK(generic_minimal(ss).holds == oracle::generic_minimal_brute(ss));
        CHECK(o.holds == generic_controllable(dual_structured(ss)).holds);
    }
}

TEST_CASE("generic minimality and the sampling oracle") {
    const RatMatrix a{{0, -2, 0, 0}, {1, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    const LinearSystem worked(a, RatMatrix::identity(4), RatMatrix::identity(4), RatMatrix(4, 4));
    const StructuredSystem ps = structured_from(worked);
    CHECK(generic_minimal(ps).holds);
    const OracleResult r = sample_minimality_oracle(ps, 100, 1);
    CHECK(r.fraction() >= 0.95);

    const StructuredSystem trap(pattern(2, 2, {{0, 1}, {1, 1}}), ZeroPattern::all_free(2, 1), pattern(1, 2, {{0, 1}}),
                                ZeroPattern::all_free(1, 1));
    CHECK_FALSE(generic_minimal(trap).holds);
    CHECK(sample_minimality_oracle(trap, 100, 1).fraction() == 0.0);

    const StructuredSystem no_c(ZeroPattern::all_free(2, 2), ZeroPattern::all_free(2, 1), ZeroPattern::all_fixed(1, 2),
                                ZeroPattern::all_free(1, 1));
    CHECK_FALSE(generic_minimal(no_c).holds);
    CHECK(sample_minimality_oracle(no_c, 100, 1).fraction() == 0.0);

    const StructuredSystem unreach(pattern(2, 2, {{1, 0}}), pattern(2, 1, {{1, 0}}), ZeroPattern::all_free(1, 2),
                                   ZeroPattern::all_free(1, 1));
    CHECK_FALSE(generic_minimal(unreach).holds);
    CHECK(sample_minimality_oracle(unreach, 100, 1).fraction() == 0.0);
}

TEST_CASE("oracle is deterministic and independent of the job count") {
    const StructuredSystem full(ZeroPattern::all_free(3, 3), ZeroPattern::all_free(3, 1), ZeroPattern::all_free(1, 3),
                                ZeroPattern::all_free(1, 1));
    const OracleResult a = sample_minimality_oracle(full, 50, 42, 1);
    const OracleResult b = sample_minimality_oracle(full, 50, 42, 4);
    CHECK(a.minimal == b.minimal);
    CHECK(a.failures == b.failures);
    CHECK_THROWS_AS(sample_minimality_oracle(full, 0, 1), DomainError);
}

TEST_CASE("non-identifiability witness") {
    const StructuredSystem siso(ZeroPattern::all_free(1, 1), ZeroPattern::all_free(1, 1), ZeroPattern::all_free(1, 1),
                                ZeroPattern::all_free(1, 1));
    const ParamVector p{3, 5, 4, 1};
    const ParamVector q = non_identifiability_witness(siso, p);
    CHECK(q == ParamVector{3, 10, 2, 1});
    CHECK(equivalent(instantiate(siso, p), instantiate(siso, q)));
    CHECK(instantiate(siso, q) == transform(instantiate(siso, p), RatMatrix::diagonal({2})));

    const StructuredSystem no_c(ZeroPattern::all_free(1, 1), ZeroPattern::all_free(1, 1), ZeroPattern::all_fixed(1, 1),
                                ZeroPattern::all_free(1, 1));
    CHECK_THROWS_AS(non_identifiability_witness(no_c, {1, 1, 1}), NotApplicableError);
    CHECK_THROWS_AS(non_identifiability_witness(siso, {3, 5, 0, 1}), ExceptionalParameterError);
    CHECK_THROWS_AS(non_identifiability_witness(siso, {3, 5}), ShapeError);
}

TEST_CASE("minimality necessary check") {
    const RatMatrix a{{0, -2, 0, 0}, {1, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(minimality_necessary_check(LinearSystem(a, RatMatrix::identity(4), RatMatrix::identity(4), RatMatrix(4, 4))).holds);
    const LinearSystem zero_c(RatMatrix{{1, 0}, {1, 1}}, RatMatrix{{1}, {0}}, RatMatrix(1, 2), RatMatrix{{0}});
    const auto r1 = minimality_necessary_check(zero_c);
    CHECK_FALSE(r1.holds);
    CHECK(std::find(r1.violated.begin(), r1.violated.end(), 3) != r1.violated.end());
    const LinearSystem unr(RatMatrix{{1, 0}, {0, 1}}, RatMatrix{{1}, {0}}, RatMatrix{{1, 1}}, RatMatrix{{0}});
    const auto r2 = minimality_necessary_check(unr);
    CHECK_FALSE(r2.holds);
    CHECK(std::find(r2.violated.begin(), r2.violated.end(), 1) != r2.violated.end());
}
