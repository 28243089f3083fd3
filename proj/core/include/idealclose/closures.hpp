#pragma once

#include "idealclose/closure.hpp"
#include "idealclose/finite_ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idealclose {

// ---------------------------------------------------------------------------
// Radical.

// Membership is exact everywhere through the trick variable; the closure
// engine handles monomial ideals of free polynomial rings (squarefree parts)
// and throws domain_error elsewhere.
ClosureOperation radical_closure();
// Exact on a finite ring: r lies in the radical of I iff r^dim lands in I.
ClosureOperation radical_closure(const FiniteRing& F);

// ---------------------------------------------------------------------------
// Saturation by a fixed ideal: I maps to (I : a^infinity).
ClosureOperation saturation_closure(const Ideal& a);

// ---------------------------------------------------------------------------
// Frobenius.

// Stage search f^(p^e) in I^[p^e] for e up to the budget.  On a free
// polynomial ring the ring is regular, Frobenius is flat, and the operation
// is the identity, which certifies exact out-verdicts; on proper quotients
// failures stay unknown and no closure engine is offered.
ClosureOperation frobenius_closure(std::uint32_t e_cap = 0);
// Exact on a finite ring: the stages stabilize once the p-power map on
// elements revisits an earlier power map.
ClosureOperation frobenius_closure(const FiniteRing& F);

// The single stage {f : f^(p^e) in I^[p^e]}, exact membership in any
// characteristic-p ring; closure engine in the regular and finite cases.
ClosureOperation frobenius_stage(std::uint32_t e);
ClosureOperation frobenius_stage(std::uint32_t e, const FiniteRing& F);

// ---------------------------------------------------------------------------
// Integral closure of monomial ideals.

// Generator exponent vectors of a monomial ideal; membership in the attached
// polyhedron conv(rows) + R^n_{>=0} is decided by exact rational feasibility.
struct NewtonPolyhedron {
    std::size_t nvars = 0;
    std::vector<std::vector<std::uint32_t>> exponents;

    static NewtonPolyhedron of(const Ideal& I);
    bool member(const std::vector<std::uint32_t>& u) const;
};

// Minimal lattice points of the polyhedron inside the generator box.
Ideal integral_closure_monomial(const Ideal& I);
ClosureOperation integral_closure_op();

// Independent route: a monomial f lies in the integral closure iff f^n lies
// in I^n for some n; searches n up to the bound and never answers out.
Verdict integral_membership_oracle(const Polynomial& f, const Ideal& I,
                                   std::uint32_t n_max);

// ---------------------------------------------------------------------------
// Basically full closure: I maps to (Im : m) for the designated maximal
// ideal m.
ClosureOperation basically_full_closure(const Ideal& m);

// ---------------------------------------------------------------------------
// Delta closure for the multiplicative set generated by the given ideals.
// Directedness collapses all words of length up to L into the single word
// W^L with W the product of all generators, so each stage is one colon.  The
// general form truncates at the word budget; the finite form is exact since
// the descending chain of W-powers stabilizes.
ClosureOperation delta_closure(std::vector<Ideal> gens);
ClosureOperation delta_closure(std::vector<Ideal> gens, const FiniteRing& F);

// ---------------------------------------------------------------------------
// v-operation on a finite ring.  Every non-zerodivisor of a finite ring is a
// unit, so the total quotient ring is the ring itself and the cyclic modules
// containing I are exactly the principal ideals above it.
ClosureOperation v_operation(const FiniteRing& F);

// ---------------------------------------------------------------------------
// Monomial primary decomposition by generator splitting; components are
// primary to monomial primes, pairwise distinct, and irredundant.
std::vector<Ideal> monomial_primary_decomposition(const Ideal& I);

// Intersection of the components of maximal dimension, i.e. of minimal
// codimension, with ties all intersected.
Ideal unmixed_part(const Ideal& I);

// ---------------------------------------------------------------------------
// Preclosures: operations that miss exactly one closure axiom.

struct Preclosure {
    ClosureOperation op;
    // which axiom is expected to fail: "extension", "idempotence", or
    // "order-preservation"
    std::string fails_axiom;
    // family on which the failure re-verifies; may be empty when only a
    // search outcome is recorded
    std::vector<Ideal> certificate;
};

// Runs the axiom checker on the stored certificate and confirms that the
// designated axiom fails while the other two hold.
CheckReport verify_preclosure(const Preclosure& pc, const Budget& b = {});

// Colon by a fixed element, certified non-idempotent on F2[x]/(x^3).
Preclosure colon_preclosure();
// Unmixed part, certified non-order-preserving on Q[x,y].
Preclosure unmixed_preclosure();
// Ratliff-Rush at the power budget, monomial ideals only; the literature
// places its order-preservation failure in k[x,y], so the certificate comes
// from a bounded search and may be absent.
Preclosure ratliff_rush_preclosure(const Budget& b = {});

std::vector<Preclosure> preclosure_suite(const Budget& b = {});

// Bounded deterministic search for monomial ideals J inside I whose
// Ratliff-Rush stages escape; records the outcome rather than asserting one.
std::optional<std::pair<Ideal, Ideal>> ratliff_rush_order_witness(const Budget& b = {});

// The Ratliff-Rush stage union up to n_max: sum of (I^(n+1) : I^n).
Ideal ratliff_rush_bounded(const Ideal& I, std::uint32_t n_max);

}  // namespace idealclose
