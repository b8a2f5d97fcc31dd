#include "structkit/linsys.hpp"

#include <stdexcept>
#include <string>

#include "structkit/canon.hpp"
#include "structkit/errors.hpp"
#include "structkit/exactla.hpp"

namespace structkit {

namespace {

std::string dims(const RatMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

LinearSystem::LinearSystem(RatMatrix a, RatMatrix b, RatMatrix c, RatMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (!a_.is_square()) {
        throw ShapeError("A must be square, got " + dims(a_));
    }
    const std::size_t n = a_.rows();
    if (b_.rows() != n) {
        throw ShapeError("B must have " + std::to_string(n) + " rows, got " + dims(b_));
    }
    if (c_.cols() != n) {
        throw ShapeError("C must have " + std::to_string(n) + " columns, got " + dims(c_));
    }
    if (d_.rows() != c_.rows() || d_.cols() != b_.cols()) {
        throw ShapeError("D must be " + std::to_string(c_.rows()) + "x" + std::to_string(b_.cols()) + ", got " +
                         dims(d_));
    }
    n_u_ = b_.cols();
    n_y_ = c_.rows();
}

LinearSystem transform(const LinearSystem& s, const RatMatrix& t) {
    if (t.rows() != s.n_x() || t.cols() != s.n_x()) {
        throw ShapeError("transform matrix must be " + std::to_string(s.n_x()) + "x" + std::to_string(s.n_x()));
    }
    const RatMatrix ti = inverse(t);
    return {t * s.A() * ti, t * s.B(), s.C() * ti, s.D()};
}

LinearSystem dual(const LinearSystem& s) {
    return {s.A().transpose(), s.C().transpose(), s.B().transpose(), s.D().transpose()};
}

RatMatrix controllability_matrix(const LinearSystem& s) {
    RatMatrix out(s.n_x(), 0);
    RatMatrix blk = s.B();
    for (std::size_t k = 0; k < s.n_x(); ++k) {
        out = hstack(out, blk);
        blk = s.A() * blk;
    }
    return out;
}

RatMatrix observability_matrix(const LinearSystem& s) {
    RatMatrix out(0, s.n_x());
    RatMatrix blk = s.C();
    for (std::size_t k = 0; k < s.n_x(); ++k) {
        out = vstack(out, blk);
        blk = blk * s.A();
    }
    return out;
}

bool is_controllable(const LinearSystem& s) { return rank(controllability_matrix(s)) == s.n_x(); }
bool is_observable(const LinearSystem& s) { return rank(observability_matrix(s)) == s.n_x(); }
bool is_minimal(const LinearSystem& s) { return is_controllable(s) && is_observable(s); }

std::vector<RatMatrix> markov_parameters(const LinearSystem& s, std::size_t count) {
    std::vector<RatMatrix> out;
    if (count == 0) {
        return out;
    }
    out.push_back(s.D());
    RatMatrix ab = s.B();
    while (out.size() < count) {
        out.push_back(s.C() * ab);
        ab = s.A() * ab;
    }
    return out;
}

bool equivalent(const LinearSystem& s1, const LinearSystem& s2) {
    if (s1.n_u() != s2.n_u() || s1.n_y() != s2.n_y()) {
        throw ShapeError("equivalence requires matching input and output counts");
    }
    const std::size_t count = s1.n_x() + s2.n_x() + 1;
    return markov_parameters(s1, count) == markov_parameters(s2, count);
}

std::vector<RatVector> simulate(const LinearSystem& s, const std::vector<RatVector>& inputs) {
    RatVector x(s.n_x());
    std::vector<RatVector> outputs;
    outputs.reserve(inputs.size());
    for (const auto& u : inputs) {
        if (u.size() != s.n_u()) {
            throw ShapeError("input vector has length " + std::to_string(u.size()) + ", expected " +
                             std::to_string(s.n_u()));
        }
        RatVector y = s.C() * x;
        const RatVector du = s.D() * u;
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] += du[i];
        }
        outputs.push_back(std::move(y));
        RatVector next = s.A() * x;
        const RatVector bu = s.B() * u;
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] += bu[i];
        }
        x = std::move(next);
    }
    return outputs;
}

LinearSystem observable_canonical(const Poly& num, const Poly& den) {
    if (den.degree() < 1 || !den.is_monic()) {
        throw DomainError("denominator must be monic of degree >= 1, got " + den.to_string("s"));
    }
    const auto n = static_cast<std::size_t>(den.degree());
    if (num.degree() > den.degree()) {
        throw DomainError("transfer function must be proper: deg num > deg den");
    }
    // den = s^n + a1 s^{n-1} + ... + an, num = b0 s^n + b1 s^{n-1} + ... + bn
    auto a_coef = [&](std::size_t i) { return den.coeff(n - i); };
    auto b_coef = [&](std::size_t i) { return num.coeff(n - i); };
    const Rational b0 = b_coef(0);
    RatMatrix a(n, n);
    RatMatrix b(n, 1);
    RatMatrix c(1, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, 0) = -a_coef(i + 1);
        if (i + 1 < n) {
            a(i, i + 1) = 1;
        }
        b(i, 0) = b_coef(i + 1) - a_coef(i + 1) * b0;
    }
    c(0, 0) = 1;
    return {a, b, c, RatMatrix{{b0}}};
}

Poly minimal_poly(const RatMatrix& a) {
    if (!a.is_square()) {
        throw ShapeError("minimal_poly requires a square matrix");
    }
    if (a.rows() == 0) {
        return Poly::constant(1);
    }
    Poly p = invariant_polys(a).front();
    if (!eval_poly(p, a).is_zero()) {
        throw std::logic_error("minimal_poly: invariant polynomial does not annihilate A");
    }
    return p;
}

}  // namespace structkit
