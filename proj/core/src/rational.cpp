#include "critheight/rational.hpp"

namespace critheight {

long padic_valuation(const Rational& x, const Integer& p) {
    if (sgn(x) == 0) throw std::domain_error("padic_valuation: zero");
    Integer tmp;
    if (mpz_divisible_p(x.get_num().get_mpz_t(), p.get_mpz_t())) {
        return static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
    }
    if (mpz_divisible_p(x.get_den().get_mpz_t(), p.get_mpz_t())) {
        return -static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
    }
    return 0;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
    if (sgn(Rational(r.get_den())) == 0) {
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& x) {
    return x.get_str();
}

}  // namespace critheight
