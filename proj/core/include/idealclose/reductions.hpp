#pragma once

#include "idealclose/closure.hpp"
#include "idealclose/finite_ring.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace idealclose {

// Nakayama property of cl on the complete lattice of a local finite ring:
// whenever J, I are lattice ideals with J inside I inside (J + mI)^cl, the
// closures of J and I must agree.  All violating pairs are reported.
CheckReport nakayama_check(const FiniteRing& F, const ClosureOperation& cl,
                           const Budget& b = {});

// Reductions of I under cl: subideals J of I with J^cl = I^cl.
struct ReductionReport {
    std::string closure;
    Ideal ideal;
    std::vector<Ideal> minimal_reductions;   // lattice order
    std::vector<std::size_t> reduction_mu;   // dim J/mJ, parallel list
    std::optional<std::size_t> spread;       // empty when mu is not constant
    Ideal core;                              // meet of the minimal reductions
    std::string nakayama;                    // cl's Nakayama status on this lattice
    CheckReport checks;
};

// Enumerates the reductions of I across the lattice, keeps the minimal ones,
// and verifies that every reduction contains a minimal one and that minimal
// generating sets of minimal reductions extend to the enclosing reduction
// (dimension counts over F_p).  The latter is asserted only under a Nakayama
// closure and recorded otherwise.
ReductionReport minimal_reductions(const FiniteRing& F, const ClosureOperation& cl,
                                   const Ideal& I, const Budget& b = {});

// Same enumeration, read for its invariants: spread = the common minimal
// generator count of the minimal reductions (witness pair reported when not
// constant), core = their intersection.
ReductionReport spread_and_core(const FiniteRing& F, const ClosureOperation& cl,
                                const Ideal& I, const Budget& b = {});

// Special part of the Frobenius closure: elements f with f^(p^e) in
// m * I^[p^e] for some e >= 0.  Exact; the p-power table of a finite ring
// cycles and the stages grow, so the union completes at the first repeat.
Ideal special_part_frobenius(const FiniteRing& F, const Ideal& I);

// A special part packaged with the axiom outcomes recorded at construction;
// re-running special_part_axioms must reproduce them.
struct SpecialPartOp {
    std::string name;
    std::function<Ideal(const Ideal&, const Budget&)> engine;
    CheckReport recorded;
};

SpecialPartOp frobenius_special_part(const FiniteRing& F, const Budget& b = {});
// The trapped lower bound sp(I) = mI, as a comparison candidate against cl.
SpecialPartOp trivial_special_part(const FiniteRing& F, const ClosureOperation& cl,
                                   const Budget& b = {});

// The four special-part axioms, exhaustively on the lattice: trapped between
// mI and I^cl; determined by the closure (I^cl = J^cl forces equal special
// parts); order-preserving; special Nakayama (J in I in (J + I^sp)^cl forces
// I inside J^cl).
CheckReport special_part_axioms(const SpecialPartOp& sp, const FiniteRing& F,
                                const ClosureOperation& cl, const Budget& b = {});

// I^cl = I + I^sp for every lattice ideal; when that holds, also asserts the
// cl-spread of every lattice ideal is well-defined.
CheckReport special_decomposition_check(const FiniteRing& F, const ClosureOperation& cl,
                                        const SpecialPartOp& sp, const Budget& b = {});

// Bounded demonstration of the integral-closure special part on monomial
// ideals: a monomial f is reported In when f^n has Newton membership in
// m I^n for some n <= n_max, with m the ideal of all the variables.
Verdict special_part_integral_membership(const Ideal& I, const Polynomial& f,
                                         const Budget& b = {});

}  // namespace idealclose
