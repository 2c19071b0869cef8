#pragma once

/**
 * @file logcomb.hpp
 * @brief Formal rational combinations of logs of primes.
 *
 * Every log|x|_v that appears in the Q-side verifiers is an exact integer
 * combination of {log p}: p-adic values by definition, archimedean values
 * through the prime factorization of the rational. Carrying these
 * combinations formally lets inequality margins be compared exactly; the
 * numeric value is only materialized for reporting, with the guard
 * tolerance 1e-9 used by every verifier when a sign must be read off a
 * nonzero combination.
 */

#include <map>
#include <string>

#include "critheight/rational.hpp"

namespace critheight {

class LogCombination {
public:
    LogCombination() = default;

    /// log|x| of a nonzero rational as Sum e_p log p from its factorization.
    static LogCombination log_abs_of(const Rational& x);
    /// log^+ |x| = log max(1, |x|).
    static LogCombination log_plus_of(const Rational& x);
    /// m * log p.
    static LogCombination prime_log(const Integer& p, const Rational& m);

    LogCombination operator+(const LogCombination& o) const;
    LogCombination operator-(const LogCombination& o) const;
    LogCombination operator*(const Rational& s) const;
    LogCombination& operator+=(const LogCombination& o);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LogCombination& o) const { return terms_ == o.terms_; }

    double value() const;
    const std::map<Integer, Rational>& terms() const { return terms_; }

    std::string to_string() const;

private:
    void prune();
    std::map<Integer, Rational> terms_;  // prime -> coefficient
};

}  // namespace critheight
