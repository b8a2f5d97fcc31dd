#include "structkit/canon.hpp"

#include <algorithm>
#include <stdexcept>

#include "structkit/errors.hpp"
#include "structkit/exactla.hpp"

namespace structkit {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) {
        std::swap(row[a], row[b]);
    }
}

// Diagonal of the Smith form, d0 | d1 | ... (each monic).
std::vector<Poly> smith_diagonal(PolyMatrix m) {
    const std::size_t n = m.size();
    std::vector<Poly> diag;
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pi = n;
            std::size_t pj = n;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (!m[i][j].is_zero() && (pi == n || m[i][j].degree() < m[pi][pj].degree())) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n) {
                break;
            }
            std::swap(m[t], m[pi]);
            swap_cols(m, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t].is_zero()) {
                    continue;
                }
                const auto [q, r] = poly_divrem(m[i][t], m[t][t]);
                for (std::size_t j = t; j < n; ++j) {
                    m[i][j] -= q * m[t][j];
                }
                clean = clean && r.is_zero();
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j].is_zero()) {
                    continue;
                }
                const auto [q, r] = poly_divrem(m[t][j], m[t][t]);
                for (std::size_t i = t; i < n; ++i) {
                    m[i][j] -= q * m[i][t];
                }
                clean = clean && r.is_zero();
            }
            if (!clean) {
                continue;
            }
            // Pivot must divide the whole trailing block; otherwise fold the
            // offending row into row t and reduce again.
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!divides(m[t][t], m[i][j])) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == n) {
                break;
            }
            for (std::size_t j = t; j < n; ++j) {
                m[t][j] += m[bad][j];
            }
        }
        diag.push_back(m[t][t].is_zero() ? Poly() : m[t][t].monic());
    }
    return diag;
}

}  // namespace

std::vector<Poly> invariant_polys(const RatMatrix& a) {
    if (!a.is_square()) {
        throw ShapeError("invariant_polys requires a square matrix");
    }
    const std::size_t n = a.rows();
    PolyMatrix m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Poly::constant(-a(i, j));
        }
        m[i][i] += Poly::lambda();
    }
    std::vector<Poly> diag = smith_diagonal(std::move(m));
    std::reverse(diag.begin(), diag.end());
    return diag;
}

void sort_divisors(std::vector<ElementaryDivisor>& divs) {
    std::sort(divs.begin(), divs.end(), [](const ElementaryDivisor& x, const ElementaryDivisor& y) {
        if (x.base != y.base) {
            return poly_less(x.base, y.base);
        }
        return x.exponent > y.exponent;
    });
}

std::vector<ElementaryDivisor> elementary_divisors_of(const std::vector<Poly>& invariants) {
    std::vector<ElementaryDivisor> divs;
    for (const auto& ip : invariants) {
        if (ip.degree() < 1) {
            continue;
        }
        for (const auto& f : poly_factor(ip).factors) {
            divs.push_back({f.base, f.multiplicity});
        }
    }
    sort_divisors(divs);
    return divs;
}

std::vector<ElementaryDivisor> elementary_divisors(const RatMatrix& a) {
    return elementary_divisors_of(invariant_polys(a));
}

RatMatrix companion(const Poly& p) { return companion_matrix(p); }

NormalForm first_nnf(const RatMatrix& a) {
    FrobeniusForm f = frobenius_form(a);
    return {std::move(f.form), std::move(f.transform)};
}

std::optional<RatMatrix> similarity_transform(const RatMatrix& a, const RatMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square()) {
        return std::nullopt;
    }
    const FrobeniusForm fa = frobenius_form(a);
    const FrobeniusForm fb = frobenius_form(b);
    if (fa.form != fb.form) {
        return std::nullopt;
    }
    // fa.form = Ta A Ta^{-1} = Tb B Tb^{-1}  =>  B = (Tb^{-1} Ta) A (Tb^{-1} Ta)^{-1}
    return inverse(fb.transform) * fa.transform;
}

NormalForm second_nnf(const RatMatrix& a) {
    std::vector<RatMatrix> blocks;
    for (const auto& d : elementary_divisors(a)) {
        blocks.push_back(companion(d.power()));
    }
    NormalForm out;
    out.form = RatMatrix::block_diagonal(blocks);
    if (out.form == a) {
        out.transform = RatMatrix::identity(a.rows());
        return out;
    }
    auto t = similarity_transform(a, out.form);
    if (!t) {
        throw std::logic_error("second_nnf: target not similar to input");
    }
    out.transform = std::move(*t);
    return out;
}

}  // namespace structkit

namespace structkit {

std::optional<std::vector<Poly>> companion_blocks(const RatMatrix& a) {
    if (!a.is_square()) {
        return std::nullopt;
    }
    const std::size_t n = a.rows();
    std::vector<Poly> polys;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && !a(end, end - 1).is_zero()) {
            ++end;
        }
        const std::size_t d = end - start;
        std::vector<Rational> coeffs(d + 1);
        coeffs[d] = 1;
        for (std::size_t i = 0; i < d; ++i) {
            coeffs[i] = -a(start + i, end - 1);
        }
        Poly p(std::move(coeffs));
        if (a.block(start, start, d, d) != companion_matrix(p)) {
            return std::nullopt;
        }
        polys.push_back(std::move(p));
        start = end;
    }
    std::vector<RatMatrix> blocks;
    for (const auto& p : polys) {
        blocks.push_back(companion_matrix(p));
    }
    if (RatMatrix::block_diagonal(blocks) != a) {
        return std::nullopt;
    }
    return polys;
}

}  // namespace structkit
