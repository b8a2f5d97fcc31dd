#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "structkit/rational.hpp"

namespace structkit {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// Trailing zeros are always trimmed, so the zero polynomial is the empty
/// coefficient sequence and equality is mathematical equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    /// The indeterminate λ.
    static Poly lambda();
    /// λ - root
    static Poly linear(const Rational& root);
    /// Π (λ - r) over `roots`.
    static Poly from_roots(const std::vector<Rational>& roots);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const;
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of λ^i (zero beyond the degree).
    [[nodiscard]] Rational coeff(std::size_t i) const;
    [[nodiscard]] Rational leading() const;
    [[nodiscard]] bool is_monic() const;
    [[nodiscard]] Poly monic() const;
    [[nodiscard]] Poly derivative() const;
    [[nodiscard]] Rational eval(const Rational& x) const;
    [[nodiscard]] Poly pow(unsigned exponent) const;

    /// Human-readable form such as "λ^2 - 3λ + 2".
    [[nodiscard]] std::string to_string(const std::string& var = "λ") const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
    friend Poly operator*(const Rational& b, Poly a) { return a *= b; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Deterministic total order: by degree, then lexicographically on the
/// coefficient sequence (lowest degree first).
bool poly_less(const Poly& a, const Poly& b);

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

/// Returns (quotient, remainder) with p = q*quot + rem, deg rem < deg q.
/// Throws DomainError when q is zero.
std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& q);

/// Exact quotient; throws DomainError if q does not divide p.
Poly poly_exact_div(const Poly& p, const Poly& q);

bool divides(const Poly& d, const Poly& p);

/// Monic gcd. Throws DomainError when both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

Poly poly_lcm(const Poly& p, const Poly& q);

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// An irreducible monic factor together with its multiplicity.
struct FactorPower {
    Poly base;
    unsigned multiplicity = 0;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct Factorization {
    Rational unit;
    std::vector<FactorPower> factors;

    /// unit × Π base^multiplicity
    [[nodiscard]] Poly expand() const;
};

/// Complete factorization over Q into monic irreducibles. Factors are
/// ordered with poly_less. Throws DomainError for the zero polynomial.
Factorization poly_factor(const Poly& p);

/// Squarefree decomposition of a nonzero polynomial: pairs
/// (squarefree monic part, multiplicity) whose product, times the leading
/// coefficient, is p. Parts equal to 1 are omitted.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p);

/// Rational roots of p (distinct, ascending). p must be nonzero.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace structkit
