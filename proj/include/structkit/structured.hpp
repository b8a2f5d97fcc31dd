#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "structkit/linsys.hpp"
#include "structkit/sysgraph.hpp"

namespace structkit {

// Positions (row, col), 0-based, that are fixed at zero.
struct ZeroPattern {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::set<std::pair<std::size_t, std::size_t>> fixed_zeros;

    static ZeroPattern all_free(std::size_t rows, std::size_t cols);
    static ZeroPattern all_fixed(std::size_t rows, std::size_t cols);
    static ZeroPattern of(const RatMatrix& m);

    [[nodiscard]] bool is_free(std::size_t i, std::size_t j) const { return fixed_zeros.count({i, j}) == 0; }
    [[nodiscard]] std::size_t free_count() const { return rows * cols - fixed_zeros.size(); }
    // Lexicographic (row-major) order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> free_positions() const;
    [[nodiscard]] ZeroPattern transpose() const;

    friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

class StructuredSystem {
public:
    StructuredSystem() = default;
    StructuredSystem(ZeroPattern a, ZeroPattern b, ZeroPattern c, ZeroPattern d);

    [[nodiscard]] const ZeroPattern& A() const { return a_; }
    [[nodiscard]] const ZeroPattern& B() const { return b_; }
    [[nodiscard]] const ZeroPattern& C() const { return c_; }
    [[nodiscard]] const ZeroPattern& D() const { return d_; }
    [[nodiscard]] std::size_t n_x() const { return a_.rows; }
    [[nodiscard]] std::size_t n_u() const { return b_.cols; }
    [[nodiscard]] std::size_t n_y() const { return c_.rows; }
    [[nodiscard]] std::size_t parameter_count() const;
    // Offset of the first B, C, D parameter within a ParamVector.
    [[nodiscard]] std::size_t offset_b() const { return a_.free_count(); }
    [[nodiscard]] std::size_t offset_c() const { return offset_b() + b_.free_count(); }
    [[nodiscard]] std::size_t offset_d() const { return offset_c() + c_.free_count(); }

    friend bool operator==(const StructuredSystem&, const StructuredSystem&) = default;

private:
    ZeroPattern a_, b_, c_, d_;
};

// Free entries of A, then B, C, D, each in lexicographic order.
using ParamVector = std::vector<Rational>;

LinearSystem instantiate(const StructuredSystem& ss, const ParamVector& p);
ParamVector parameters_of(const StructuredSystem& ss, const LinearSystem& s);
SysGraph graph_of_structured(const StructuredSystem& ss);
StructuredSystem structured_from(const LinearSystem& s);
StructuredSystem dual_structured(const StructuredSystem& ss);
// q with instantiate(dual_structured(ss), q) = dual(instantiate(ss, p)).
ParamVector dual_parameters(const StructuredSystem& ss, const ParamVector& p);

struct GenericityCertificate {
    bool holds = false;
    // Violated conditions: 1/2 for controllability, 3/4 for observability.
    std::vector<int> violated;
    // States missed by reachability (1/3) and by the path/cycle cover (2/4).
    std::vector<std::size_t> unreached;
    std::vector<std::size_t> uncovered;
    // Path/cycle cover when it exists. Paths are U-rooted (controllability)
    // or Y-topped (observability); cycles repeat their first vertex.
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::vector<Vertex>> cycles;
    // Reachability tree edges (from, to) over the states that are reached.
    std::vector<Edge> tree;
};

GenericityCertificate generic_controllable(const StructuredSystem& ss);
GenericityCertificate generic_observable(const StructuredSystem& ss);

struct MinimalityCertificate {
    bool holds = false;
    std::vector<int> violated;
    GenericityCertificate controllability;
    GenericityCertificate observability;
};

MinimalityCertificate generic_minimal(const StructuredSystem& ss);

struct OracleResult {
    std::size_t trials = 0;
    std::size_t minimal = 0;
    // Sampled parameter vectors whose instance was not minimal, by trial.
    std::vector<std::pair<std::size_t, ParamVector>> failures;

    [[nodiscard]] double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(minimal) / trials; }
};

// Samples integer parameters in [-99, 99]; trial t uses a seed derived from
// (seed, t) so the result does not depend on `jobs`.
OracleResult sample_minimality_oracle(const StructuredSystem& ss, std::size_t trials, std::uint64_t seed,
                                      unsigned jobs = 1);

// Parameters of (A, 2B, C/2, D). NotApplicableError when C has no free
// entry; ExceptionalParameterError when every free C parameter is zero in p.
ParamVector non_identifiability_witness(const StructuredSystem& ss, const ParamVector& p);

// Graph conditions a minimal system must satisfy.
MinimalityCertificate minimality_necessary_check(const LinearSystem& s);

}  // namespace structkit
