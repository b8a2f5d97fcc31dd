#include "structkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "structkit/errors.hpp"
#include "structkit/exactla.hpp"
#include "structkit/json_io.hpp"

namespace structkit {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InfeasibleCountError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const NotApplicableError*>(&e) != nullptr) return 4;
    if (dynamic_cast<const ParseError*>(&e) != nullptr || dynamic_cast<const ShapeError*>(&e) != nullptr ||
        dynamic_cast<const DomainError*>(&e) != nullptr || dynamic_cast<const NotInClassError*>(&e) != nullptr ||
        dynamic_cast<const TooLargeError*>(&e) != nullptr || dynamic_cast<const nlohmann::json::exception*>(&e) != nullptr) {
        return 2;
    }
    return 1;
}

namespace {

// FNV-1a, 64 bit.
class Digest {
public:
    void add(const std::string& bytes) {
        for (unsigned char c : bytes) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ULL;
        }
        hash_ ^= 0xff;  // separator between inputs
        hash_ *= 0x100000001b3ULL;
    }
    [[nodiscard]] std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
        return buf;
    }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

class Session {
public:
    Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    Json load(const std::string& path) {
        std::string text;
        if (path == "-") {
            if (stdin_used_) {
                throw ParseError("standard input can only be read once");
            }
            stdin_used_ = true;
            std::ostringstream ss;
            ss << in_.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(path, std::ios::binary);
            if (!f) {
                throw ParseError("cannot open " + path);
            }
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        digest_.add(text);
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    void note(const std::string& s) { digest_.add(s); }

    void report(const std::string& command, Json result) {
        Json doc = {{"command", command}, {"input_digest", digest_.hex()}, {"result", std::move(result)}};
        out_ << doc.dump(2) << '\n';
    }

    std::ostream& out() { return out_; }

private:
    std::istream& in_;
    std::ostream& out_;
    Digest digest_;
    bool stdin_used_ = false;
};

Json optional_mapping(const std::optional<VertexMapping>& m) { return m ? to_json(*m) : Json(nullptr); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structural analysis of linear state-space systems with exact rational arithmetic"};
    app.require_subcommand(1);
    Session session(in, out);
    std::function<void()> action;

    std::string file1;
    std::string file2;

    auto* graph = app.add_subcommand("graph", "Associated graph of a system (edge list or DOT)");
    bool condense_flag = false;
    bool dot = false;
    bool json_flag = false;
    graph->add_option("system", file1, "System JSON file ('-' for stdin)")->required();
    graph->add_flag("--condense", condense_flag, "Condense strong components");
    auto* dot_opt = graph->add_flag("--dot", dot, "Emit Graphviz DOT");
    graph->add_flag("--json", json_flag, "Emit a JSON report (default)")->excludes(dot_opt);
    graph->callback([&] {
        action = [&] {
            const SysGraph g = graph_of(system_from_json(session.load(file1)));
            if (dot) {
                session.out() << (condense_flag ? to_dot(condense(g)) : to_dot(g));
                return;
            }
            session.report("graph", condense_flag ? to_json(condense(g)) : to_json(g));
        };
    });

    auto* iso = app.add_subcommand("iso", "Type-restricted isomorphism of two system graphs");
    bool condensed = false;
    bool strict = false;
    iso->add_option("system1", file1)->required();
    iso->add_option("system2", file2)->required();
    iso->add_flag("--condensed", condensed, "Compare condensed graphs (CG-isomorphism)");
    iso->add_flag("--strict-io-order", strict, "Pin input and output indices");
    iso->callback([&] {
        action = [&] {
            const LinearSystem s1 = system_from_json(session.load(file1));
            const LinearSystem s2 = system_from_json(session.load(file2));
            session.note(std::string(condensed ? "c" : "-") + (strict ? "s" : "-"));
            const auto m = condensed ? cg_iso(s1, s2, strict) : iso_typed(graph_of(s1), graph_of(s2), strict);
            session.report("iso", {{"isomorphic", m.has_value()},
                                   {"condensed", condensed},
                                   {"strict_io_order", strict},
                                   {"mapping", optional_mapping(m)}});
        };
    });

    auto* canon = app.add_subcommand("canon", "Invariant polynomials, elementary divisors and normal forms");
    canon->add_option("system", file1, "System JSON file or a bare matrix")->required();
    canon->callback([&] {
        action = [&] {
            const Json doc = session.load(file1);
            const RatMatrix a = doc.is_object() ? system_from_json(doc).A() : matrix_from_json(doc);
            Json result = canon_report(a);
            const NormalForm f1 = first_nnf(a);
            const NormalForm f2 = second_nnf(a);
            result["characteristic_polynomial"] = to_json(char_poly(a));
            result["minimal_polynomial"] = to_json(minimal_poly(a));
            result["first_nnf"] = {{"form", to_json(f1.form)}, {"transform", to_json(f1.transform)}};
            result["second_nnf"] = {{"form", to_json(f2.form)}, {"transform", to_json(f2.transform)}};
            session.report("canon", std::move(result));
        };
    });

    auto* blocks = app.add_subcommand("blocks", "Block-companion realizations within the feasible count range");
    std::optional<std::size_t> count;
    blocks->add_option("system", file1)->required();
    blocks->add_option("--count", count, "Number of diagonal companion blocks");
    blocks->callback([&] {
        action = [&] {
            const LinearSystem s = system_from_json(session.load(file1));
            if (count) {
                session.note("count=" + std::to_string(*count));
                session.report("blocks", to_json(block_realization(s, *count)));
                return;
            }
            const BlockBounds b = block_bounds(s.A());
            session.report("blocks", {{"bounds", {{"k", b.k}, {"d", b.d}}}});
        };
    });

    auto* generic = app.add_subcommand("generic", "Generic controllability, observability and minimality");
    std::size_t trials = 0;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    generic->add_option("pattern", file1, "Pattern JSON file")->required();
    generic->add_option("--oracle-trials", trials, "Random rational samples for the minimality oracle");
    generic->add_option("--seed", seed, "Seed for the oracle (required with --oracle-trials)");
    generic->add_option("--jobs", jobs, "Worker threads for the oracle")->check(CLI::PositiveNumber);
    generic->callback([&] {
        action = [&] {
            const StructuredSystem ss = pattern_from_json(session.load(file1));
            Json result = {{"minimal", to_json(generic_minimal(ss))}};
            if (trials > 0) {
                if (!seed) {
                    throw ParseError("--oracle-trials requires --seed");
                }
                session.note("trials=" + std::to_string(trials) + ";seed=" + std::to_string(*seed));
                const OracleResult r = sample_minimality_oracle(ss, trials, *seed, jobs);
                Json failures = Json::array();
                for (const auto& [t, p] : r.failures) {
                    failures.push_back({{"trial", t}, {"p", params_to_json(p)}});
                }
                result["oracle"] = {{"trials", r.trials},
                                    {"minimal", r.minimal},
                                    {"fraction", r.fraction()},
                                    {"seed", *seed},
                                    {"non_minimal_samples", failures}};
            }
            session.report("generic", std::move(result));
        };
    });

    auto* witness = app.add_subcommand("witness", "Non-identifiability witness for a structured system");
    witness->add_option("pattern", file1)->required();
    witness->add_option("params", file2, "Parameter vector JSON")->required();
    witness->callback([&] {
        action = [&] {
            const StructuredSystem ss = pattern_from_json(session.load(file1));
            const ParamVector p = params_from_json(session.load(file2));
            const ParamVector q = non_identifiability_witness(ss, p);
            session.report("witness", {{"p", params_to_json(p)},
                                       {"q", params_to_json(q)},
                                       {"equivalent", equivalent(instantiate(ss, p), instantiate(ss, q))}});
        };
    });

    auto* transform_cmd = app.add_subcommand("transform", "Apply a similarity transform (TAT^-1, TB, CT^-1, D)");
    transform_cmd->add_option("system", file1)->required();
    transform_cmd->add_option("matrix", file2, "Transform matrix JSON")->required();
    transform_cmd->callback([&] {
        action = [&] {
            const LinearSystem s = system_from_json(session.load(file1));
            const RatMatrix t = matrix_from_json(session.load(file2));
            session.report("transform", {{"system", to_json(transform(s, t))}});
        };
    });

    auto* equiv = app.add_subcommand("equiv", "Input/output equivalence of two systems");
    equiv->add_option("system1", file1)->required();
    equiv->add_option("system2", file2)->required();
    equiv->callback([&] {
        action = [&] {
            const LinearSystem s1 = system_from_json(session.load(file1));
            const LinearSystem s2 = system_from_json(session.load(file2));
            session.report("equiv", {{"equivalent", equivalent(s1, s2)}});
        };
    });

    auto* demo = app.add_subcommand("demo-components",
                                    "Condensed-graph components of 1/prod(s - i) before and after diagonalization");
    std::size_t demo_n = 0;
    demo->add_option("--n", demo_n, "Number of poles")->required()->check(CLI::Range(1, 12));
    demo->callback([&] {
        action = [&] {
            session.note("n=" + std::to_string(demo_n));
            std::vector<Rational> poles;
            for (std::size_t i = 1; i <= demo_n; ++i) poles.emplace_back(static_cast<long>(i));
            const LinearSystem s = observable_canonical(Poly::constant(1), Poly::from_roots(poles));
            const Diagonalization dg = diagonalize_rational(s.A());
            const LinearSystem st = transform(s, dg.transform);
            session.report("demo-components",
                           {{"n", demo_n},
                            {"components_before", condense(graph_of(s)).components.size()},
                            {"components_after", condense(graph_of(st)).components.size()},
                            {"system", to_json(s)},
                            {"transform", to_json(dg.transform)},
                            {"diagonalized", to_json(st)}});
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return 0;
}

}  // namespace structkit
