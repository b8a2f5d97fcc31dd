#include <algorithm>
#include <optional>

#include "integer_divisors.hpp"
#include "structkit/errors.hpp"
#include "structkit/poly.hpp"

namespace structkit {

namespace {

// Scales p to a primitive polynomial with integer coefficients and a
// positive leading coefficient.
Poly primitive_integer(const Poly& p) {
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        den_lcm = lcm(den_lcm, c.denominator());
    }
    BigInt num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        num_gcd = gcd(num_gcd, BigInt(c.numerator() * (den_lcm / c.denominator())));
    }
    Rational scale(den_lcm, num_gcd);
    if (p.leading().sign() < 0) {
        scale = -scale;
    }
    return p * scale;
}

Poly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<Rational> dd;
    dd.reserve(n);
    for (const auto& y : ys) {
        dd.emplace_back(y);
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(BigInt(xs[i] - xs[i - level]));
        }
    }
    Poly result = Poly::constant(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        result = result * Poly::linear(Rational(xs[k])) + Poly::constant(dd[k]);
    }
    return result;
}

bool has_integer_coefficients(const Poly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c.is_integer(); });
}

struct KroneckerSearch {
    const Poly& target;  // primitive integer polynomial
    int degree;
    std::vector<BigInt> xs;
    std::vector<std::vector<BigInt>> candidates;
    std::vector<BigInt> chosen;
    std::optional<Poly> found;

    void run(std::size_t i) {
        if (found) {
            return;
        }
        if (i == xs.size()) {
            Poly g = interpolate(xs, chosen);
            if (g.degree() != degree || !has_integer_coefficients(g)) {
                return;
            }
            if (target.leading().numerator() % g.leading().numerator() != 0) {
                return;
            }
            if (divides(g, target)) {
                found = g.monic();
            }
            return;
        }
        for (const auto& v : candidates[i]) {
            bool consistent = true;
            for (std::size_t j = 0; j < i && consistent; ++j) {
                const BigInt dv = v - chosen[j];
                const BigInt dx = xs[i] - xs[j];
                consistent = (dv % dx) == 0;
            }
            if (!consistent) {
                continue;
            }
            chosen.push_back(v);
            run(i + 1);
            chosen.pop_back();
            if (found) {
                return;
            }
        }
    }
};

// Kronecker's method: a degree-d integer factor g of f is determined by its
// values at d+1 integer points, each of which divides the value of f there.
std::optional<Poly> kronecker_factor_of_degree(const Poly& f, int d) {
    const Poly target = primitive_integer(f);
    const long radius = std::max(12L, 2L * target.degree());
    struct Point {
        BigInt x;
        BigInt value;
        BigInt count;
    };
    std::vector<Point> points;
    for (long x = -radius; x <= radius; ++x) {
        const Rational v = target.eval(Rational(x));
        if (v.is_zero()) {
            continue;
        }
        points.push_back({BigInt(x), v.numerator(), detail::divisor_count(v.numerator())});
    }
    std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
        if (a.count != b.count) {
            return a.count < b.count;
        }
        return abs(a.x) < abs(b.x);
    });
    if (points.size() < static_cast<std::size_t>(d + 1)) {
        return std::nullopt;
    }
    KroneckerSearch search{target, d, {}, {}, {}, std::nullopt};
    for (int i = 0; i <= d; ++i) {
        const Point& pt = points[static_cast<std::size_t>(i)];
        search.xs.push_back(pt.x);
        std::vector<BigInt> values;
        for (const auto& div : detail::positive_divisors(pt.value)) {
            values.push_back(div);
            if (i > 0) {
                values.push_back(-div);
            }
        }
        search.candidates.push_back(std::move(values));
    }
    search.run(0);
    return search.found;
}

void factor_rootless(const Poly& f, std::vector<Poly>& out) {
    if (f.degree() <= 3) {
        // No rational roots and degree <= 3 means irreducible.
        out.push_back(f);
        return;
    }
    for (int d = 2; d <= f.degree() / 2; ++d) {
        if (auto g = kronecker_factor_of_degree(f, d)) {
            factor_rootless(*g, out);
            factor_rootless(poly_exact_div(f, *g).monic(), out);
            return;
        }
    }
    out.push_back(f);
}

std::vector<Poly> factor_squarefree(Poly f) {
    std::vector<Poly> out;
    for (const auto& r : rational_roots(f)) {
        const Poly lin = Poly::linear(r);
        out.push_back(lin);
        f = poly_exact_div(f, lin);
    }
    if (f.degree() >= 1) {
        factor_rootless(f.monic(), out);
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) {
        throw DomainError("rational roots of the zero polynomial");
    }
    std::vector<Rational> roots;
    Poly q = primitive_integer(p);
    if (q.coeff(0).is_zero()) {
        roots.emplace_back(0);
        while (q.coeff(0).is_zero() && q.degree() > 0) {
            q = poly_exact_div(q, Poly::lambda());
        }
    }
    if (q.degree() >= 1) {
        const auto nums = detail::positive_divisors(q.coeff(0).numerator());
        const auto dens = detail::positive_divisors(q.leading().numerator());
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                if (gcd(a, b) != 1) {
                    continue;
                }
                for (const auto& cand : {Rational(a, b), -Rational(a, b)}) {
                    if (q.eval(cand).is_zero()) {
                        roots.push_back(cand);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) {
        throw DomainError("squarefree decomposition of the zero polynomial");
    }
    std::vector<std::pair<Poly, unsigned>> parts;
    const Poly f = p.monic();
    if (f.degree() == 0) {
        return parts;
    }
    // Yun's algorithm.
    const Poly a0 = poly_gcd(f, f.derivative());
    Poly b = poly_exact_div(f, a0);
    Poly c = poly_exact_div(f.derivative(), a0);
    Poly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        const Poly a = poly_gcd(b, d);
        if (a.degree() > 0) {
            parts.emplace_back(a, i);
        }
        b = poly_exact_div(b, a);
        c = poly_exact_div(d, a);
        d = c - b.derivative();
        ++i;
    }
    return parts;
}

Factorization poly_factor(const Poly& p) {
    if (p.is_zero()) {
        throw DomainError("cannot factor the zero polynomial");
    }
    Factorization result;
    result.unit = p.leading();
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (auto& f : factor_squarefree(part)) {
            result.factors.push_back({std::move(f), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return poly_less(a.base, b.base); });
    return result;
}

}  // namespace structkit
