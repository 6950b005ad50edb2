#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace concordance {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation's precondition on its mathematical input fails.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when bundled or user-supplied data contradicts itself.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Least nonnegative residue of x modulo m (m > 0).
inline Integer mod_floor(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long mod_floor(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) {
    Integer n = mod_floor(q.get_num(), q.get_den());
    return make_rational(n, q.get_den());
}

bool is_prime(long n);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace concordance
