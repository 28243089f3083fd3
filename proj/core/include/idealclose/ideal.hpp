/**
 * @file ideal.hpp
 * Ideals with cached reduced Groebner bases, the Buchberger engine, and the
 * derived operations (sum, product, intersection, colon, saturation, bracket
 * powers, radical membership) together with ring maps.
 *
 * Ideals of a quotient ring R = k[x]/K are computed through their lifts: the
 * canonical form of I <= R is the reduced Groebner basis of I + K over the
 * ambient polynomial ring.  Two ideals are equal iff their lifted bases are.
 */
#ifndef IDEALCLOSE_IDEAL_HPP
#define IDEALCLOSE_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealclose/polynomial.hpp"

namespace idealclose {

/// Process-wide reduction-step guardrail for Groebner computations.
/// Exceeding it raises resource_error instead of looping unboundedly.
std::uint64_t gb_step_limit();
void set_gb_step_limit(std::uint64_t steps);

/// Reduced Groebner basis of the given generators over their (polynomial)
/// ring: minimal, inter-reduced, monic, sorted descending by leading
/// monomial.  Deterministic for a fixed input sequence.
std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens);

class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    /// Canonical form: reduced Groebner basis of the lift I + K over the
    /// ambient polynomial ring (K = defining ideal, empty for poly rings).
    const std::vector<Polynomial>& reduced_groebner_basis() const;

    /// Generators inside the ring itself: normal forms of the reduced basis
    /// modulo the quotient, zeros dropped.  Equals the reduced basis for
    /// polynomial rings.
    std::vector<Polynomial> canonical_gens() const;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_unit() const;

    /// True when the lift is generated by monomials (reduced basis terms).
    bool is_monomial() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

Ideal ideal_from_strings(const RingPtr& ring, const std::vector<std::string>& gens);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::uint32_t n);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// The set x * J = { x f : f in J }, which is already an ideal.
Ideal ideal_scale(const Polynomial& x, const Ideal& j);
/// (a : b) = { f : f b <= a }.
Ideal ideal_colon(const Ideal& a, const Ideal& b);
/// (a : b^infinity), the stabilized iterated colon.
Ideal ideal_saturation(const Ideal& a, const Ideal& b);
/// Frobenius bracket power: ideal generated by g^(p^e) for generators g.
Ideal bracket_power(const Ideal& a, std::uint32_t e);
/// Exact radical membership via Rabinowitsch's trick over the lift.
bool radical_membership(const Polynomial& f, const Ideal& a);

/// Minimal monomial generators; requires a monomial ideal in a polynomial
/// ring (the reduced basis of such an ideal is the minimal generating set).
std::vector<Monomial> minimal_monomial_generators(const Ideal& a);

/// Quotient ring k[x]/(gens); flattens iterated quotients to one presentation.
RingPtr make_quotient_ring(const RingPtr& base, const std::vector<Polynomial>& gens);
RingPtr make_quotient_ring(const RingPtr& base, const std::vector<std::string>& gens);

class RingMap {
public:
    /// images[i] is the target-ring value of source variable i; the map must
    /// kill every defining relation of the source (checked here).
    RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& f) const;
    /// Extension phi(I) S: ideal generated by the images of the generators.
    Ideal extend(const Ideal& i) const;

    /// True for maps that are the identity on a shared variable list into a
    /// quotient by a larger ideal; these admit exact preimages.
    bool is_quotient_surjection() const;
    /// Preimage of an ideal of the target; requires is_quotient_surjection().
    Ideal contract(const Ideal& j) const;

    std::string to_string() const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<Polynomial> images_;
};

}  // namespace idealclose

#endif
