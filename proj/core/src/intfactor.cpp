#include "critheight/intfactor.hpp"

#include <stdexcept>

namespace critheight {

bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's cycle-finding variant of Pollard rho. n must be odd, composite, > 1.
Integer rho_factor(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer diff, saved_x, saved_y;
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            diff = x > y ? x - y : y - x;
            if (sgn(diff) == 0) break;  // cycle without factor; retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Integer, unsigned> factor_integer(const Integer& n) {
    if (sgn(n) == 0) throw std::domain_error("factor_integer: zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> out;
    if (m == 1) return out;

    for (const unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++out[Integer(p)];
        }
    }
    // 6k +/- 1 wheel up to 10^6, enough for every test-scale input.
    for (unsigned long p = 7; p <= 1000000 && m > 1; p += (p % 6 == 1 ? 4 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++out[Integer(p)];
        }
        if (Integer(p) * Integer(p) > m) break;  // remainder is 1 or prime
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

std::vector<Integer> prime_support(const Rational& x) {
    if (sgn(x) == 0) throw std::domain_error("prime_support: zero");
    std::map<Integer, unsigned> merged = factor_integer(x.get_num());
    for (auto& [p, e] : factor_integer(x.get_den())) merged[p] += e;
    std::vector<Integer> out;
    out.reserve(merged.size());
    for (auto& [p, e] : merged) out.push_back(p);
    return out;
}

}  // namespace critheight
