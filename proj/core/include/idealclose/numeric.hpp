/**
 * @file numeric.hpp
 * Exact coefficient arithmetic: rationals in characteristic 0, integers
 * reduced to [0, p) in characteristic p.  A coefficient is always stored as
 * a Rational; in characteristic p the invariant is denominator == 1 and
 * 0 <= numerator < p.
 */
#ifndef IDEALCLOSE_NUMERIC_HPP
#define IDEALCLOSE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace idealclose {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ring_mismatch_error : public std::logic_error {
public:
    explicit ring_mismatch_error(const std::string& what) : std::logic_error(what) {}
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computation exceeds its monomial/step budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid algebraic request (wrong characteristic, zero divisor, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

inline std::int64_t mod_reduce(const Integer& a, std::uint32_t p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

/// Inverse of a mod p (p prime), via extended Euclid.
inline std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
    std::int64_t r0 = p, r1 = a % p, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += p;
    if (r1 == 0) throw domain_error("division by zero in F_" + std::to_string(p));
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 != 1) throw domain_error("non-invertible element mod " + std::to_string(p));
    return ((t0 % p) + p) % p;
}

/// Canonical form of q in the coefficient field of characteristic p.
inline Rational cf_normalize(const Rational& q, std::uint32_t p) {
    if (p == 0) return q;  // cpp_rational already keeps lowest terms, positive denominator
    std::int64_t num = mod_reduce(numerator(q), p);
    std::int64_t den = mod_reduce(denominator(q), p);
    if (den == 0) throw domain_error("denominator vanishes mod " + std::to_string(p));
    return Rational((num * mod_inverse(den, p)) % p);
}

inline Rational cf_add(const Rational& a, const Rational& b, std::uint32_t p) {
    return p == 0 ? Rational(a + b) : cf_normalize(a + b, p);
}

inline Rational cf_sub(const Rational& a, const Rational& b, std::uint32_t p) {
    return p == 0 ? Rational(a - b) : cf_normalize(a - b, p);
}

inline Rational cf_mul(const Rational& a, const Rational& b, std::uint32_t p) {
    return p == 0 ? Rational(a * b) : cf_normalize(a * b, p);
}

inline Rational cf_neg(const Rational& a, std::uint32_t p) {
    return p == 0 ? Rational(-a) : cf_normalize(-a, p);
}

inline Rational cf_inv(const Rational& a, std::uint32_t p) {
    if (a == 0) throw domain_error("inverse of zero coefficient");
    if (p == 0) return Rational(1) / a;
    return Rational(mod_inverse(static_cast<std::int64_t>(numerator(a)), p));
}

inline Rational cf_div(const Rational& a, const Rational& b, std::uint32_t p) {
    return cf_mul(a, cf_inv(b, p), p);
}

/// a^n for n >= 0.
inline Rational cf_pow(Rational a, unsigned long long n, std::uint32_t p) {
    Rational acc(1);
    while (n > 0) {
        if (n & 1ull) acc = cf_mul(acc, a, p);
        a = cf_mul(a, a, p);
        n >>= 1;
    }
    return acc;
}

inline std::string cf_to_string(const Rational& a) {
    std::string s = numerator(a).str();
    if (denominator(a) != 1) s += "/" + denominator(a).str();
    return s;
}

}  // namespace idealclose

#endif
