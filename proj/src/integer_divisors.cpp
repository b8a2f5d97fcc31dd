#include "integer_divisors.hpp"

#include <algorithm>
#include <map>

#include "structkit/errors.hpp"

namespace structkit::detail {

namespace {

constexpr unsigned long kTrialLimit = 20000;

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard's rho; returns a nontrivial factor of a
// composite n.
BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) {
        return 2;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2;
        BigInt x;
        BigInt g = 1;
        BigInt q = 1;
        BigInt ys;
        unsigned long r = 1;
        constexpr unsigned long m = 64;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = f(y);
            }
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                BigInt diff = x - ys;
                g = gcd(BigInt(abs(diff)), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n == 1) {
        return;
    }
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    const BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& value) {
    if (value == 0) {
        throw DomainError("cannot factor zero");
    }
    BigInt n = abs(value);
    std::map<BigInt, unsigned> primes;
    for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        const BigInt bp(p);
        if (bp * bp > n) {
            break;
        }
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            n /= bp;
            ++primes[bp];
        }
    }
    if (n > 1) {
        factor_into(n, primes);
    }
    return {primes.begin(), primes.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t count = divs.size();
        BigInt power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < count; ++i) {
                divs.push_back(divs[i] * power);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

BigInt divisor_count(const BigInt& n) {
    BigInt count = 1;
    for (const auto& [p, e] : factor_integer(n)) {
        count *= (e + 1);
    }
    return count;
}

}  // namespace structkit::detail
