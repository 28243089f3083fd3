/**
 * @file polynomial.hpp
 * Multivariate polynomials over Q or F_p with a fixed term order, plus the
 * ring descriptor shared by every object of a computation.
 *
 * Representation invariants:
 *  - terms are sorted strictly descending in the ring's order (leading first);
 *  - no zero coefficients are stored; coefficients are canonical (lowest
 *    terms in char 0, values in [0, p) in char p);
 *  - polynomials of a quotient ring are normal forms modulo the quotient's
 *    reduced Groebner basis.
 */
#ifndef IDEALCLOSE_POLYNOMIAL_HPP
#define IDEALCLOSE_POLYNOMIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "idealclose/monomial.hpp"
#include "idealclose/numeric.hpp"

namespace idealclose {

struct RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
    };

    Polynomial() = default;

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial one(RingPtr ring);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial m, const Rational& c);
    /// Canonicalizes arbitrary term lists: sorts, merges, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    std::uint64_t degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rational& c) const;
    /// this * (c * m), no quotient reduction (used inside division loops).
    Polynomial times_term(const Rational& c, const Monomial& m) const;
    Polynomial pow(std::uint32_t n) const;
    /// Term-wise p^e-th power; characteristic must be positive.
    Polynomial frobenius_power(std::uint32_t e) const;
    /// Makes the leading coefficient 1; zero stays zero.
    Polynomial monic() const;

    /// Normal form modulo the ring's quotient basis (identity for poly rings).
    Polynomial reduced_in_ring() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    /// Adopts an already-canonical term vector without re-sorting or reducing.
    static Polynomial raw(RingPtr ring, std::vector<Term> terms);
    friend Polynomial normal_form(const Polynomial&, const std::vector<Polynomial>&,
                                  std::uint64_t*, std::uint64_t);
};

struct RingDescriptor {
    std::uint32_t characteristic = 0;  // 0 means Q, otherwise a prime < 2^16
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::grevlex_order();
    /// Reduced Groebner basis of the defining ideal, over the ambient ring;
    /// empty for plain polynomial rings.
    std::vector<Polynomial> quotient;
    RingPtr ambient;  // null for plain polynomial rings

    bool is_quotient() const { return !quotient.empty(); }
    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
    std::string field_label() const;
    /// Textual presentation, e.g. "poly(F2; x, y | x^2, x*y)".
    std::string describe() const;
};

RingPtr make_poly_ring(std::uint32_t characteristic, std::vector<std::string> vars,
                       MonomialOrder order = MonomialOrder::grevlex_order());

/// Structural ring equality (characteristic, variables, order, quotient basis).
bool same_ring(const RingPtr& a, const RingPtr& b);
/// The polynomial ring a quotient is presented over; identity on poly rings.
RingPtr ambient_ring(const RingPtr& r);
/// Re-tags a polynomial with a structurally compatible ring (same variables).
Polynomial retag(const Polynomial& f, const RingPtr& ring);

/// Fully reduced remainder of f under the basis (every term irreducible).
/// Deterministic: reducers are tried in basis order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
/// Same, charging one unit per reduction step against *steps; raises
/// resource_error once *steps exceeds step_limit.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       std::uint64_t* steps, std::uint64_t step_limit);

/// Parses the textual syntax, e.g. "3/2*x^2*y - y + 1".
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace idealclose

#endif
