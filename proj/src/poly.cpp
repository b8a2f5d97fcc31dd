#include "structkit/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "structkit/errors.hpp"

namespace structkit {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::lambda() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::linear(const Rational& root) { return Poly({-root, Rational(1)}); }

Poly Poly::from_roots(const std::vector<Rational>& roots) {
    Poly p = constant(1);
    for (const auto& r : roots) {
        p *= linear(r);
    }
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Rational(1); }

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

Poly Poly::monic() const {
    if (is_zero()) {
        throw DomainError("zero polynomial has no monic associate");
    }
    const Rational inv = leading().inverse();
    Poly r = *this;
    for (auto& c : r.coeffs_) {
        c *= inv;
    }
    return r;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    }
    return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result = constant(1);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!unit) {
            os << mag;
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& q) {
    if (q.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Rational> rem = p.coeffs();
    const int dq = q.degree();
    const int dp = p.degree();
    if (dp < dq) {
        return {Poly(), p};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(dp - dq + 1));
    const Rational lead_inv = q.leading().inverse();
    for (int k = dp - dq; k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + dq);
        if (rem[top].is_zero()) {
            continue;
        }
        const Rational f = rem[top] * lead_inv;
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dq; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= f * q.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_exact_div(const Poly& p, const Poly& q) {
    auto [quot, rem] = poly_divrem(p, q);
    if (!rem.is_zero()) {
        throw DomainError("polynomial " + q.to_string() + " does not divide " + p.to_string());
    }
    return quot;
}

bool divides(const Poly& d, const Poly& p) {
    if (d.is_zero()) {
        return p.is_zero();
    }
    return poly_divrem(p, d).second.is_zero();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) {
        throw DomainError("gcd of two zero polynomials is undefined");
    }
    Poly a = p;
    Poly b = q;
    while (!b.is_zero()) {
        Poly r = poly_divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

Poly poly_lcm(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) {
        return Poly();
    }
    return poly_exact_div(p * q, poly_gcd(p, q)).monic();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly Factorization::expand() const {
    Poly p = Poly::constant(unit);
    for (const auto& f : factors) {
        p *= f.base.pow(f.multiplicity);
    }
    return p;
}

}  // namespace structkit
