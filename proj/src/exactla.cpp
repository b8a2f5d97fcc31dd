#include "structkit/exactla.hpp"

#include <algorithm>
#include <stdexcept>

#include "structkit/errors.hpp"

namespace structkit {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Scales every row by the lcm of its denominators; the rank is unchanged and
// the determinant is multiplied by the returned factor.
IntMatrix integer_rows(const RatMatrix& m, BigInt& scale) {
    IntMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
    scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            den = lcm(den, m(i, j).denominator());
        }
        scale *= den;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j).numerator() * (den / m(i, j).denominator());
        }
    }
    return out;
}

struct BareissResult {
    std::size_t rank = 0;
    BigInt last_pivot = 1;
    int sign = 1;
};

BareissResult bareiss(IntMatrix& a, std::size_t cols) {
    BareissResult res;
    BigInt prev = 1;
    const std::size_t rows = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            res.sign = -res.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

void require_square(const RatMatrix& m, const char* what) {
    if (!m.is_square()) {
        throw ShapeError(std::string(what) + " requires a square matrix");
    }
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    if (m.empty()) {
        return 0;
    }
    BigInt scale;
    IntMatrix a = integer_rows(m, scale);
    return bareiss(a, m.cols()).rank;
}

Rational determinant(const RatMatrix& m) {
    require_square(m, "determinant");
    if (m.rows() == 0) {
        return 1;
    }
    BigInt scale;
    IntMatrix a = integer_rows(m, scale);
    const BareissResult r = bareiss(a, m.cols());
    if (r.rank < m.rows()) {
        return 0;
    }
    return Rational(BigInt(r.last_pivot * r.sign), scale);
}

Rational trace(const RatMatrix& m) {
    require_square(m, "trace");
    Rational t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        t += m(i, i);
    }
    return t;
}

RowEchelon rref(const RatMatrix& m) {
    RowEchelon out{m, {}};
    RatMatrix& a = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::swap(a(p, j), a(r, j));
            }
        }
        const Rational inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) {
            a(r, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) {
                continue;
            }
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (!a(r, j).is_zero()) {
                    a(i, j) -= f * a(r, j);
                }
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs) {
    if (m.rows() != rhs.rows()) {
        throw ShapeError("solve: right-hand side row count mismatch");
    }
    const RowEchelon e = rref(hstack(m, rhs));
    RatMatrix x(m.cols(), rhs.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t pc = e.pivots[r];
        if (pc >= m.cols()) {
            throw DomainError("solve: inconsistent linear system");
        }
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            x(pc, j) = e.reduced(r, m.cols() + j);
        }
    }
    return x;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.reduced(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& m) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    const RowEchelon e = rref(hstack(m, RatMatrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        throw SingularMatrixError("matrix is singular");
    }
    return e.reduced.block(0, n, n, n);
}

bool is_invertible(const RatMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

Poly char_poly(const RatMatrix& a) {
    require_square(a, "char_poly");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t i = 0; i < n; ++i) {
            mk(i, i) += c[n - k + 1];
        }
        c[n - k] = -trace(a * mk) / Rational(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

RatMatrix eval_poly(const Poly& p, const RatMatrix& a) {
    require_square(a, "eval_poly");
    RatMatrix acc(a.rows(), a.cols());
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            acc(i, i) += *it;
        }
    }
    return acc;
}

RatVector apply_poly(const Poly& p, const RatMatrix& a, const RatVector& v) {
    RatVector acc(v.size());
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = a * acc;
        for (std::size_t i = 0; i < v.size(); ++i) {
            acc[i] += *it * v[i];
        }
    }
    return acc;
}

Poly local_minimal_poly(const RatMatrix& a, const RatVector& v) {
    require_square(a, "local_minimal_poly");
    std::vector<RatVector> krylov;
    RatVector next = v;
    for (;;) {
        if (!krylov.empty() || std::any_of(next.begin(), next.end(), [](const Rational& x) { return !x.is_zero(); })) {
            if (!krylov.empty()) {
                const RatMatrix basis = RatMatrix::from_columns(a.rows(), krylov);
                if (rank(hstack(basis, RatMatrix::column(next))) == krylov.size()) {
                    const RatMatrix c = solve(basis, RatMatrix::column(next));
                    std::vector<Rational> coeffs(krylov.size() + 1);
                    for (std::size_t j = 0; j < krylov.size(); ++j) {
                        coeffs[j] = -c(j, 0);
                    }
                    coeffs.back() = 1;
                    return Poly(std::move(coeffs));
                }
            }
        } else {
            return Poly::constant(1);
        }
        krylov.push_back(next);
        next = a * next;
    }
}

RatMatrix companion_matrix(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1) {
        throw DomainError("companion matrix requires a monic polynomial of positive degree, got " + p.to_string());
    }
    const auto n = static_cast<std::size_t>(p.degree());
    RatMatrix l(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        l(i, i - 1) = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        l(i, n - 1) = -p.coeff(i);
    }
    return l;
}

namespace {

struct CyclicDecomposition {
    std::vector<Poly> factors;
    RatMatrix basis;  // columns; A·basis = basis·F
};

// Vector whose local minimal polynomial equals the minimal polynomial of a.
RatVector maximal_vector(const RatMatrix& a, Poly& minpoly) {
    const std::size_t n = a.rows();
    std::vector<Poly> local(n);
    minpoly = Poly::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n);
        e[i] = 1;
        local[i] = local_minimal_poly(a, e);
        minpoly = poly_lcm(minpoly, local[i]);
    }
    // Sum of vectors with pairwise coprime local minimal polynomials has the
    // product as its local minimal polynomial.
    RatVector v(n);
    for (const auto& [base, mult] : poly_factor(minpoly).factors) {
        const Poly power = base.pow(mult);
        for (std::size_t i = 0; i < n; ++i) {
            if (!divides(power, local[i])) {
                continue;
            }
            RatVector e(n);
            e[i] = 1;
            const RatVector w = apply_poly(poly_exact_div(local[i], power), a, e);
            for (std::size_t k = 0; k < n; ++k) {
                v[k] += w[k];
            }
            break;
        }
    }
    return v;
}

CyclicDecomposition decompose(const RatMatrix& a) {
    const std::size_t m = a.rows();
    if (m == 0) {
        return {{}, RatMatrix(0, 0)};
    }
    Poly mu;
    const RatVector v = maximal_vector(a, mu);
    const auto d = static_cast<std::size_t>(mu.degree());

    std::vector<RatVector> krylov{v};
    for (std::size_t j = 1; j < d; ++j) {
        krylov.push_back(a * krylov.back());
    }
    const RatMatrix k1 = RatMatrix::from_columns(m, krylov);
    if (d == m) {
        return {{mu}, k1};
    }

    // Linear functional w with w·A^j·v = 0 for j < d-1 and 1 for j = d-1;
    // the common kernel of w, wA, ..., wA^{d-1} is an A-invariant complement
    // of the cyclic subspace generated by v.
    RatMatrix rhs(d, 1);
    rhs(d - 1, 0) = 1;
    const RatMatrix w = solve(k1.transpose(), rhs).transpose();
    RatMatrix functionals = w;
    RatMatrix row = w;
    for (std::size_t j = 1; j < d; ++j) {
        row = row * a;
        functionals = vstack(functionals, row);
    }
    const RatMatrix complement = RatMatrix::from_columns(m, nullspace(functionals));
    const RatMatrix restricted = solve(complement, a * complement);

    CyclicDecomposition rest = decompose(restricted);
    CyclicDecomposition out;
    out.factors.push_back(mu);
    out.factors.insert(out.factors.end(), rest.factors.begin(), rest.factors.end());
    out.basis = hstack(k1, complement * rest.basis);
    return out;
}

}  // namespace

FrobeniusForm frobenius_form(const RatMatrix& a) {
    require_square(a, "frobenius_form");
    CyclicDecomposition dec = decompose(a);
    std::vector<RatMatrix> blocks;
    blocks.reserve(dec.factors.size());
    for (const auto& f : dec.factors) {
        blocks.push_back(companion_matrix(f));
    }
    FrobeniusForm out;
    out.form = RatMatrix::block_diagonal(blocks);
    out.invariant_factors = std::move(dec.factors);
    if (out.form == a) {
        out.transform = RatMatrix::identity(a.rows());
    } else {
        out.transform = inverse(dec.basis);
    }
    return out;
}

Diagonalization diagonalize_rational(const RatMatrix& a) {
    require_square(a, "diagonalize_rational");
    const std::size_t n = a.rows();
    std::vector<Rational> eigenvalues;
    for (const auto& f : poly_factor(char_poly(a)).factors) {
        if (f.base.degree() != 1) {
            throw IrrationalSpectrumError("eigenvalues are not all rational (factor " + f.base.to_string() + ")");
        }
        eigenvalues.push_back(-f.base.coeff(0));
    }
    std::sort(eigenvalues.begin(), eigenvalues.end());
    std::vector<RatVector> vectors;
    RatVector diag;
    for (const auto& ev : eigenvalues) {
        const auto basis = nullspace(a - RatMatrix::identity(n) * ev);
        for (const auto& b : basis) {
            vectors.push_back(b);
            diag.push_back(ev);
        }
    }
    if (vectors.size() < n) {
        throw DefectiveMatrixError("matrix is not diagonalizable");
    }
    const RatMatrix eig = RatMatrix::from_columns(n, vectors);
    Diagonalization out{RatMatrix::diagonal(diag), inverse(eig)};
    if (out.transform * a * eig != out.diagonal) {
        throw std::logic_error("diagonalize_rational: similarity check failed");
    }
    return out;
}

}  // namespace structkit
