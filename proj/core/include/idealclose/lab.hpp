#pragma once

#include "idealclose/closure.hpp"
#include "idealclose/finite_ring.hpp"

#include <vector>

namespace idealclose {

// Every lattice member as a Groebner-side ideal, in lattice order (zero
// first, the whole ring last).
std::vector<Ideal> lattice_family(const FiniteRing& F, std::size_t cap = 100000);

// check_axioms + check_basics + semiprime_check quantified over the complete
// ideal lattice of F; no sampling.  The trailing "exhaustive" record
// summarizes the sub-checks and carries the lattice size.
CheckReport exhaustive_check(const FiniteRing& F, const ClosureOperation& cl,
                             const Budget& b = {});

// Fixed points of cl on the lattice.
struct ClosedCensus {
    std::vector<Subspace> closed;  // lattice order
    bool zero_closed = false;
    bool all_closed = false;
};

ClosedCensus closed_census(const FiniteRing& F, const ClosureOperation& cl,
                           const Budget& b = {});

// Lattice-level consequences of being a closure: the fixed-point set is
// meet-closed; maximal proper closed ideals are prime (asserted only when cl
// is semi-prime on this lattice, recorded informationally otherwise); every
// proper closed ideal sits under a maximal one.
CheckReport lattice_property_check(const FiniteRing& F, const ClosureOperation& cl,
                                   const Budget& b = {});

// phi(I^cl) S contained in (phi(I) S)^cl for every I in the family, which
// must live in phi's source ring.  One record; witnesses name the escaping
// generators.  Infinite quotient rings are tagged "polynomial analogue".
CheckReport persistence_check(const RingMap& phi, const ClosureOperation& cl_src,
                              const ClosureOperation& cl_tgt,
                              const std::vector<Ideal>& family, const Budget& b = {});

// Exhaustive variant over the complete lattice of the finite source ring.
CheckReport persistence_check(const FiniteRing& source, const RingMap& phi,
                              const ClosureOperation& cl_src,
                              const ClosureOperation& cl_tgt, const Budget& b = {});

// Weak closure built from the maximal proper cl-closed ideals P of the
// lattice: x lies in I^{cw} iff for every p in P some d outside p has
// d*x in I.  Exact on the lattice.  The report records primality of the P
// members, whether every produced element set is an ideal, and the pointwise
// comparison cw <= cl; over a non-semi-prime base these are recorded
// outcomes, not assertions.
struct CwConstruction {
    ClosureOperation op;
    std::vector<Subspace> cf_max;  // lattice order
    CheckReport report;
};

CwConstruction construct_cw(const FiniteRing& F, const ClosureOperation& cl,
                            const Budget& b = {});

}  // namespace idealclose
