#pragma once

#include <cstddef>
#include <vector>

#include "structkit/matrix.hpp"
#include "structkit/poly.hpp"

namespace structkit {

// Discrete-time LTI system x' = Ax + Bu, y = Cx + Du. Dimensions are checked
// on construction; the value is immutable afterwards.
class LinearSystem {
public:
    LinearSystem() = default;
    LinearSystem(RatMatrix a, RatMatrix b, RatMatrix c, RatMatrix d);

    [[nodiscard]] const RatMatrix& A() const { return a_; }
    [[nodiscard]] const RatMatrix& B() const { return b_; }
    [[nodiscard]] const RatMatrix& C() const { return c_; }
    [[nodiscard]] const RatMatrix& D() const { return d_; }

    [[nodiscard]] std::size_t n_x() const { return a_.rows(); }
    [[nodiscard]] std::size_t n_u() const { return n_u_; }
    [[nodiscard]] std::size_t n_y() const { return n_y_; }

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

private:
    RatMatrix a_, b_, c_, d_;
    std::size_t n_u_ = 0;
    std::size_t n_y_ = 0;
};

// (TAT^{-1}, TB, CT^{-1}, D)
LinearSystem transform(const LinearSystem& s, const RatMatrix& t);
// (A^T, C^T, B^T, D^T)
LinearSystem dual(const LinearSystem& s);

RatMatrix controllability_matrix(const LinearSystem& s);
RatMatrix observability_matrix(const LinearSystem& s);
bool is_controllable(const LinearSystem& s);
bool is_observable(const LinearSystem& s);
bool is_minimal(const LinearSystem& s);

// D, CB, CAB, ..., C A^{count-2} B
std::vector<RatMatrix> markov_parameters(const LinearSystem& s, std::size_t count);

// Input/output equivalence: equal D and equal C A^k B for k < n_x + n_x'.
bool equivalent(const LinearSystem& s1, const LinearSystem& s2);

// Outputs y_0..y_{N-1} from zero initial state for inputs u_0..u_{N-1}.
std::vector<RatVector> simulate(const LinearSystem& s, const std::vector<RatVector>& inputs);

// SISO observable canonical form of num/den, den monic of degree n >= 1,
// deg num <= n.
LinearSystem observable_canonical(const Poly& num, const Poly& den);

Poly minimal_poly(const RatMatrix& a);

}  // namespace structkit
