#include "idealclose/reductions.hpp"

#include "idealclose/closures.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace idealclose {

namespace {

void require_lattice_ring(const FiniteRing& F, const Ideal& I, const char* who) {
    if (!same_ring(F.ring(), I.ring()))
        throw ring_mismatch_error(std::string(who) + ": ideal from a different ring");
}

void require_local(const FiniteRing& F, const char* who) {
    if (!F.is_local()) throw domain_error(std::string(who) + ": needs a local ring");
}

std::string label(const FiniteRing& F, const Subspace& s) {
    return F.to_ideal(s).to_string();
}

// Lattice with the closure of every member precomputed, as lattice indices.
struct LatticeTable {
    IdealLattice L;
    std::vector<std::size_t> close;
};

LatticeTable tabulate(const FiniteRing& F, const ClosureOperation& cl, const Budget& b) {
    LatticeTable t;
    t.L = enumerate_ideals(F);
    t.close.reserve(t.L.size());
    for (const Subspace& s : t.L.ideals)
        t.close.push_back(t.L.index_of(F.to_subspace(cl.closure(F.to_ideal(s), b))));
    return t;
}

CheckRecord base_record(std::string check, const FiniteRing& F, const std::string& cl) {
    CheckRecord r;
    r.check = std::move(check);
    r.ring = F.ring()->describe();
    r.closure = cl;
    return r;
}

// Union of the stages {f : f^(p^e) in m * I^[p^e]}; the stages grow with e
// (apply Frobenius to the stage equation and absorb m^[p] into m), so the
// union is complete once the p-power table repeats.
Subspace frobenius_special_union(const FiniteRing& F, const Subspace& s) {
    const std::uint32_t p = F.characteristic();
    const Subspace& m = F.maximal_ideal();
    std::vector<FpVec> powers;
    powers.reserve(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) powers.push_back(F.element(i));
    Subspace acc = F.ideal_mul(m, s);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t guard = 0; guard <= 4096; ++guard) {
        std::vector<std::size_t> sig(F.size());
        for (std::size_t i = 0; i < F.size(); ++i) sig[i] = F.index_of(powers[i]);
        if (!seen.insert(std::move(sig)).second) return acc;
        std::vector<FpVec> bracket_gens;
        for (const auto& row : s.rows()) bracket_gens.push_back(powers[F.index_of(row)]);
        Subspace target = F.ideal_mul(m, F.ideal_span(bracket_gens));
        std::vector<FpVec> stage;
        for (std::size_t i = 0; i < F.size(); ++i)
            if (target.contains(powers[i])) stage.push_back(F.element(i));
        acc = acc.sum(F.ideal_span(stage));
        for (auto& v : powers) v = F.pow(v, p);
    }
    throw resource_error("frobsp: power table failed to cycle");
}

}  // namespace

CheckReport nakayama_check(const FiniteRing& F, const ClosureOperation& cl,
                           const Budget& b) {
    require_local(F, "nakayama");
    LatticeTable t = tabulate(F, cl, b);
    const Subspace& m = F.maximal_ideal();

    CheckRecord rec = base_record("nakayama", F, cl.name());
    for (std::size_t ji = 0; ji < t.L.size(); ++ji)
        for (std::size_t ii = 0; ii < t.L.size(); ++ii) {
            if (!t.L.ideals[ii].contains(t.L.ideals[ji])) continue;
            Subspace hull = t.L.ideals[ji].sum(F.ideal_mul(m, t.L.ideals[ii]));
            std::size_t hull_cl = t.close[t.L.index_of(hull)];
            if (!t.L.ideals[hull_cl].contains(t.L.ideals[ii])) continue;
            if (t.close[ji] != t.close[ii])
                rec.witnesses.push_back("J = " + label(F, t.L.ideals[ji]) +
                                        ", I = " + label(F, t.L.ideals[ii]));
        }
    rec.status = rec.witnesses.empty() ? "pass" : "fail";
    rec.extra.emplace_back("lattice-size", std::to_string(t.L.size()));

    CheckReport rep;
    rep.add(std::move(rec));
    return rep;
}

namespace {

ReductionReport reduction_report(const FiniteRing& F, const ClosureOperation& cl,
                                 const Ideal& I, const Budget& b) {
    require_local(F, "reductions");
    require_lattice_ring(F, I, "reductions");
    LatticeTable t = tabulate(F, cl, b);
    const Subspace& m = F.maximal_ideal();
    const std::size_t si = t.L.index_of(F.to_subspace(I));
    const std::size_t target = t.close[si];

    std::vector<std::size_t> reductions;
    for (std::size_t j = 0; j < t.L.size(); ++j)
        if (t.L.ideals[si].contains(t.L.ideals[j]) && t.close[j] == target)
            reductions.push_back(j);

    std::vector<std::size_t> minimal;
    for (std::size_t j : reductions) {
        bool least = true;
        for (std::size_t k : reductions)
            if (k != j && t.L.ideals[j].contains(t.L.ideals[k])) {
                least = false;
                break;
            }
        if (least) minimal.push_back(j);
    }

    Subspace core_s = t.L.ideals[minimal.front()];
    for (std::size_t k : minimal) core_s = core_s.intersect(t.L.ideals[k]);

    std::string nak = nakayama_check(F, cl, b).records.front().status;

    ReductionReport rep{cl.name(), I, {}, {}, std::nullopt, F.to_ideal(core_s), nak, {}};
    for (std::size_t k : minimal) {
        rep.minimal_reductions.push_back(F.to_ideal(t.L.ideals[k]));
        rep.reduction_mu.push_back(minimal_generator_count(F, t.L.ideals[k]));
    }

    // spread: the common minimal generator count, when it is common
    CheckRecord spread = base_record("reductions/spread", F, cl.name());
    spread.extra.emplace_back("ideal", I.to_string());
    bool constant = true;
    for (std::size_t i = 1; i < rep.reduction_mu.size(); ++i)
        if (rep.reduction_mu[i] != rep.reduction_mu[0]) {
            constant = false;
            spread.witnesses.push_back(
                rep.minimal_reductions[0].to_string() + " has mu " +
                std::to_string(rep.reduction_mu[0]) + "; " +
                rep.minimal_reductions[i].to_string() + " has mu " +
                std::to_string(rep.reduction_mu[i]));
            break;
        }
    if (constant) rep.spread = rep.reduction_mu.front();
    spread.status = constant ? "pass" : "fail";
    rep.checks.add(std::move(spread));

    // every reduction must contain a minimal one
    CheckRecord lemma = base_record("reductions/lemma-containment", F, cl.name());
    lemma.extra.emplace_back("ideal", I.to_string());
    for (std::size_t j : reductions) {
        bool covered = false;
        for (std::size_t k : minimal)
            if (t.L.ideals[j].contains(t.L.ideals[k])) {
                covered = true;
                break;
            }
        if (!covered) lemma.witnesses.push_back(label(F, t.L.ideals[j]));
    }
    lemma.status = lemma.witnesses.empty() ? "pass" : "fail";
    rep.checks.add(std::move(lemma));

    // a minimal generating set of a minimal reduction K stays independent
    // modulo mJ inside any enclosing reduction J, so it extends to a minimal
    // generating set of J; dim (K + mJ)/mJ must equal mu(K)
    CheckRecord extend = base_record("reductions/basis-extension", F, cl.name());
    extend.extra.emplace_back("ideal", I.to_string());
    for (std::size_t j : reductions)
        for (std::size_t k : minimal) {
            if (!t.L.ideals[j].contains(t.L.ideals[k])) continue;
            Subspace mj = F.ideal_mul(m, t.L.ideals[j]);
            std::size_t image_dim = t.L.ideals[k].sum(mj).dim() - mj.dim();
            if (image_dim != minimal_generator_count(F, t.L.ideals[k]))
                extend.witnesses.push_back("K = " + label(F, t.L.ideals[k]) +
                                           ", J = " + label(F, t.L.ideals[j]));
        }
    extend.status = extend.witnesses.empty() ? "pass" : "fail";
    if (nak != "pass")
        extend.extra.emplace_back("note", "base closure is not Nakayama; recorded outcome");
    rep.checks.add(std::move(extend));

    return rep;
}

}  // namespace

ReductionReport minimal_reductions(const FiniteRing& F, const ClosureOperation& cl,
                                   const Ideal& I, const Budget& b) {
    return reduction_report(F, cl, I, b);
}

ReductionReport spread_and_core(const FiniteRing& F, const ClosureOperation& cl,
                                const Ideal& I, const Budget& b) {
    return reduction_report(F, cl, I, b);
}

Ideal special_part_frobenius(const FiniteRing& F, const Ideal& I) {
    require_local(F, "frobsp");
    require_lattice_ring(F, I, "frobsp");
    if (F.characteristic() == 0) throw domain_error("frobsp: needs positive characteristic");
    return F.to_ideal(frobenius_special_union(F, F.to_subspace(I)));
}

SpecialPartOp frobenius_special_part(const FiniteRing& F, const Budget& b) {
    SpecialPartOp sp;
    sp.name = "frobsp";
    FiniteRing Fcopy = F;
    sp.engine = [Fcopy](const Ideal& I, const Budget&) {
        return special_part_frobenius(Fcopy, I);
    };
    sp.recorded = special_part_axioms(sp, F, frobenius_closure(F), b);
    return sp;
}

SpecialPartOp trivial_special_part(const FiniteRing& F, const ClosureOperation& cl,
                                   const Budget& b) {
    require_local(F, "mI");
    SpecialPartOp sp;
    sp.name = "mI";
    FiniteRing Fcopy = F;
    sp.engine = [Fcopy](const Ideal& I, const Budget&) {
        require_lattice_ring(Fcopy, I, "mI");
        return Fcopy.to_ideal(Fcopy.ideal_mul(Fcopy.maximal_ideal(), Fcopy.to_subspace(I)));
    };
    sp.recorded = special_part_axioms(sp, F, cl, b);
    return sp;
}

CheckReport special_part_axioms(const SpecialPartOp& sp, const FiniteRing& F,
                                const ClosureOperation& cl, const Budget& b) {
    require_local(F, "special-part axioms");
    LatticeTable t = tabulate(F, cl, b);
    const Subspace& m = F.maximal_ideal();
    const std::string who = sp.name + " of " + cl.name();

    std::vector<std::size_t> spv;
    spv.reserve(t.L.size());
    for (const Subspace& s : t.L.ideals)
        spv.push_back(t.L.index_of(F.to_subspace(sp.engine(F.to_ideal(s), b))));

    CheckReport rep;

    CheckRecord trapped = base_record("special/trapped", F, who);
    for (std::size_t i = 0; i < t.L.size(); ++i) {
        Subspace lower = F.ideal_mul(m, t.L.ideals[i]);
        if (!t.L.ideals[spv[i]].contains(lower) ||
            !t.L.ideals[t.close[i]].contains(t.L.ideals[spv[i]]))
            trapped.witnesses.push_back(label(F, t.L.ideals[i]));
    }
    trapped.status = trapped.witnesses.empty() ? "pass" : "fail";
    rep.add(std::move(trapped));

    CheckRecord determined = base_record("special/closure-determined", F, who);
    for (std::size_t i = 0; i < t.L.size(); ++i)
        for (std::size_t j = i + 1; j < t.L.size(); ++j)
            if (t.close[i] == t.close[j] && spv[i] != spv[j])
                determined.witnesses.push_back(label(F, t.L.ideals[i]) + " vs " +
                                               label(F, t.L.ideals[j]));
    determined.status = determined.witnesses.empty() ? "pass" : "fail";
    rep.add(std::move(determined));

    CheckRecord mono = base_record("special/order-preserving", F, who);
    for (std::size_t i = 0; i < t.L.size(); ++i)
        for (std::size_t j = 0; j < t.L.size(); ++j)
            if (t.L.ideals[j].contains(t.L.ideals[i]) &&
                !t.L.ideals[spv[j]].contains(t.L.ideals[spv[i]]))
                mono.witnesses.push_back(label(F, t.L.ideals[i]) + " inside " +
                                         label(F, t.L.ideals[j]));
    mono.status = mono.witnesses.empty() ? "pass" : "fail";
    rep.add(std::move(mono));

    // special Nakayama: J in I in (J + I^sp)^cl forces I inside J^cl
    CheckRecord nak = base_record("special/nakayama", F, who);
    for (std::size_t ji = 0; ji < t.L.size(); ++ji)
        for (std::size_t ii = 0; ii < t.L.size(); ++ii) {
            if (!t.L.ideals[ii].contains(t.L.ideals[ji])) continue;
            Subspace hull = t.L.ideals[ji].sum(t.L.ideals[spv[ii]]);
            std::size_t hull_cl = t.close[t.L.index_of(hull)];
            if (!t.L.ideals[hull_cl].contains(t.L.ideals[ii])) continue;
            if (!t.L.ideals[t.close[ji]].contains(t.L.ideals[ii]))
                nak.witnesses.push_back("J = " + label(F, t.L.ideals[ji]) +
                                        ", I = " + label(F, t.L.ideals[ii]));
        }
    nak.status = nak.witnesses.empty() ? "pass" : "fail";
    rep.add(std::move(nak));

    return rep;
}

CheckReport special_decomposition_check(const FiniteRing& F, const ClosureOperation& cl,
                                        const SpecialPartOp& sp, const Budget& b) {
    require_local(F, "special decomposition");
    LatticeTable t = tabulate(F, cl, b);
    const std::string who = sp.name + " of " + cl.name();

    CheckReport rep;
    CheckRecord decomp = base_record("special/decomposition", F, who);
    for (std::size_t i = 0; i < t.L.size(); ++i) {
        Subspace spi = F.to_subspace(sp.engine(F.to_ideal(t.L.ideals[i]), b));
        if (t.L.ideals[i].sum(spi) != t.L.ideals[t.close[i]])
            decomp.witnesses.push_back(label(F, t.L.ideals[i]));
    }
    decomp.status = decomp.witnesses.empty() ? "pass" : "fail";
    bool decomposed = decomp.status == "pass";
    rep.add(std::move(decomp));

    CheckRecord spread = base_record("special/spread-defined", F, who);
    if (decomposed) {
        for (const Subspace& s : t.L.ideals) {
            ReductionReport rr = spread_and_core(F, cl, F.to_ideal(s), b);
            if (!rr.spread) spread.witnesses.push_back(label(F, s));
        }
        spread.status = spread.witnesses.empty() ? "pass" : "fail";
    } else {
        spread.status = "unknown";
        spread.extra.emplace_back("note", "skipped: decomposition failed");
    }
    rep.add(std::move(spread));

    return rep;
}

Verdict special_part_integral_membership(const Ideal& I, const Polynomial& f,
                                         const Budget& b) {
    const RingPtr& R = I.ring();
    if (R->is_quotient() || !I.is_monomial())
        throw domain_error("intsp: monomial ideals of a polynomial ring only");
    if (f.is_zero()) return Verdict::in();
    if (f.terms().size() != 1) return Verdict::unknown(UnknownReason::not_implemented);

    std::vector<Polynomial> vars;
    for (std::size_t v = 0; v < R->nvars(); ++v) vars.push_back(Polynomial::variable(R, v));
    Ideal m(R, vars);

    const Monomial& e = f.leading_monomial();
    Ideal In = I;
    for (std::uint32_t n = 1; n <= b.n_max; ++n) {
        Monomial fn(e.nvars());
        for (std::size_t v = 0; v < e.nvars(); ++v) fn.exps[v] = e.exps[v] * n;
        if (NewtonPolyhedron::of(ideal_product(m, In)).member(fn.exps)) return Verdict::in();
        In = ideal_product(In, I);
    }
    return Verdict::unknown(UnknownReason::budget_exhausted);
}

}  // namespace idealclose
