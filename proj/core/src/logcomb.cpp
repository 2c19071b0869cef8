#include "critheight/logcomb.hpp"

#include <cmath>
#include <sstream>

#include "critheight/intfactor.hpp"

namespace critheight {

void LogCombination::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sgn(it->second) == 0) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

LogCombination LogCombination::log_abs_of(const Rational& x) {
    if (sgn(x) == 0) throw std::domain_error("LogCombination: log of zero");
    LogCombination out;
    for (auto& [p, e] : factor_integer(x.get_num())) out.terms_[p] += Rational(e);
    for (auto& [p, e] : factor_integer(x.get_den())) out.terms_[p] -= Rational(e);
    out.prune();
    return out;
}

LogCombination LogCombination::log_plus_of(const Rational& x) {
    if (sgn(x) == 0 || rational_abs(x) <= 1) return LogCombination();
    return log_abs_of(x);
}

LogCombination LogCombination::prime_log(const Integer& p, const Rational& m) {
    LogCombination out;
    if (sgn(m) != 0) out.terms_[p] = m;
    return out;
}

LogCombination LogCombination::operator+(const LogCombination& o) const {
    LogCombination r(*this);
    r += o;
    return r;
}

LogCombination& LogCombination::operator+=(const LogCombination& o) {
    for (auto& [p, m] : o.terms_) terms_[p] += m;
    prune();
    return *this;
}

LogCombination LogCombination::operator-(const LogCombination& o) const {
    LogCombination r(*this);
    for (auto& [p, m] : o.terms_) r.terms_[p] -= m;
    r.prune();
    return r;
}

LogCombination LogCombination::operator*(const Rational& s) const {
    LogCombination r;
    if (sgn(s) == 0) return r;
    for (auto& [p, m] : terms_) r.terms_[p] = m * s;
    return r;
}

double LogCombination::value() const {
    double acc = 0.0;
    for (auto& [p, m] : terms_) acc += m.get_d() * log_abs_integer(p);
    return acc;
}

std::string LogCombination::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, m] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m.get_str() << "*";
        os << "log(" << p.get_str() << ")";
    }
    return os.str();
}

}  // namespace critheight
