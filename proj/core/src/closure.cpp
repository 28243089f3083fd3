#include "idealclose/closure.hpp"

#include <algorithm>
#include <sstream>

namespace idealclose {

UnknownReason Verdict::reason() const {
    if (state_ != State::unknown)
        throw domain_error("verdict: only unknown verdicts carry a reason");
    return reason_;
}

std::string Verdict::to_string() const {
    switch (state_) {
        case State::in: return "in";
        case State::out: return "out";
        default:
            return reason_ == UnknownReason::budget_exhausted
                       ? "unknown(budget-exhausted)"
                       : "unknown(not-implemented)";
    }
}

void Budget::validate() const {
    if (e_max == 0 || n_max == 0 || word_max == 0 || mono_max == 0)
        throw domain_error("budget: all bounds must be positive");
}

std::string Budget::to_string() const {
    std::ostringstream os;
    os << "e_max=" << e_max << ",n_max=" << n_max << ",word_max=" << word_max
       << ",mono_max=" << mono_max;
    return os.str();
}

ClosureOperation::ClosureOperation(std::string name, MembershipFn membership,
                                   ClosureFn closure, bool semi_prime_claim,
                                   bool finite_type_claim)
    : name_(std::move(name)),
      membership_(std::move(membership)),
      closure_(std::move(closure)),
      claims_semi_prime_(semi_prime_claim),
      claims_finite_type_(finite_type_claim) {
    if (!membership_ && !closure_)
        throw domain_error("closure operation " + name_ + " has no engine");
}

Verdict ClosureOperation::membership(const Ideal& I, const Polynomial& f,
                                     const Budget& b) const {
    b.validate();
    if (membership_) return membership_(I, f, b);
    try {
        return closure_(I, b).contains(f) ? Verdict::in() : Verdict::out();
    } catch (const resource_error&) {
        return Verdict::unknown(UnknownReason::budget_exhausted);
    }
}

Ideal ClosureOperation::closure(const Ideal& I, const Budget& b) const {
    b.validate();
    if (!closure_)
        throw domain_error("closure operation " + name_ + " answers membership only");
    return closure_(I, b);
}

bool CheckReport::all_passed() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.status == "pass"; });
}

bool CheckReport::has_failure() const {
    return std::any_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.status == "fail"; });
}

bool CheckReport::has_unknown() const {
    return std::any_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.status == "unknown"; });
}

void CheckReport::merge(const CheckReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

const CheckRecord* CheckReport::find(const std::string& check) const {
    for (const CheckRecord& r : records)
        if (r.check == check) return &r;
    return nullptr;
}

namespace {

// Closure evaluation that degrades to "unknown" on exhausted budgets.
struct Evaluated {
    std::optional<Ideal> ideal;
    std::string note;
};

Evaluated eval_closure(const ClosureOperation& cl, const Ideal& I, const Budget& b) {
    try {
        return {cl.closure(I, b), ""};
    } catch (const resource_error& e) {
        return {std::nullopt, e.what()};
    }
}

void require_one_ring(const std::vector<Ideal>& family) {
    if (family.empty()) throw domain_error("checker: empty ideal family");
    for (const Ideal& I : family)
        if (!same_ring(I.ring(), family.front().ring()))
            throw ring_mismatch_error("checker: family spans several rings");
}

std::string ring_label(const std::vector<Ideal>& family) {
    return family.front().ring()->describe();
}

// First canonical generator of a that fails to lie in b, as text.
std::string missing_gen(const Ideal& a, const Ideal& b) {
    for (const Polynomial& g : a.canonical_gens())
        if (!b.contains(g)) return g.to_string();
    return "?";
}

// Finalizes a record: any witness is a failure; otherwise unresolved inputs
// leave the verdict unknown.
CheckRecord seal(CheckRecord r, bool saw_unknown, const std::string& unknown_note) {
    if (!r.witnesses.empty()) {
        r.status = "fail";
    } else if (saw_unknown) {
        r.status = "unknown";
        if (!unknown_note.empty()) r.extra.emplace_back("note", unknown_note);
    } else {
        r.status = "pass";
    }
    return r;
}

CheckRecord base_record(std::string check, const std::string& ring,
                        const ClosureOperation& cl) {
    CheckRecord r;
    r.check = std::move(check);
    r.ring = ring;
    r.closure = cl.name();
    return r;
}

}  // namespace

CheckReport check_axioms(const ClosureOperation& cl, const std::vector<Ideal>& family,
                         const Budget& b) {
    require_one_ring(family);
    const std::string ring = ring_label(family);
    CheckReport report;

    if (!cl.has_closure_engine()) {
        CheckRecord r = base_record("axioms", ring, cl);
        r.status = "unknown";
        r.extra.emplace_back("note", "no closure engine");
        report.add(std::move(r));
        return report;
    }

    std::vector<Evaluated> closed;
    bool saw_unknown = false;
    std::string note;
    for (const Ideal& I : family) {
        closed.push_back(eval_closure(cl, I, b));
        if (!closed.back().ideal) { saw_unknown = true; note = closed.back().note; }
    }

    CheckRecord ext = base_record("axioms/extension", ring, cl);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!closed[i].ideal) continue;
        if (!closed[i].ideal->contains(family[i]))
            ext.witnesses.push_back("I = " + family[i].to_string() + ": " +
                                    missing_gen(family[i], *closed[i].ideal) +
                                    " drops out of I^cl = " + closed[i].ideal->to_string());
    }
    report.add(seal(std::move(ext), saw_unknown, note));

    CheckRecord idem = base_record("axioms/idempotence", ring, cl);
    bool idem_unknown = saw_unknown;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!closed[i].ideal) continue;
        Evaluated again = eval_closure(cl, *closed[i].ideal, b);
        if (!again.ideal) { idem_unknown = true; note = again.note; continue; }
        if (!(*again.ideal == *closed[i].ideal))
            idem.witnesses.push_back("I = " + family[i].to_string() +
                                     ": I^cl = " + closed[i].ideal->to_string() +
                                     " but (I^cl)^cl = " + again.ideal->to_string());
    }
    report.add(seal(std::move(idem), idem_unknown, note));

    CheckRecord ord = base_record("axioms/order-preservation", ring, cl);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i == j || !closed[i].ideal || !closed[j].ideal) continue;
            if (!family[j].contains(family[i])) continue;
            if (!closed[j].ideal->contains(*closed[i].ideal))
                ord.witnesses.push_back(
                    "J = " + family[i].to_string() + " lies in I = " + family[j].to_string() +
                    " but J^cl = " + closed[i].ideal->to_string() + " contains " +
                    missing_gen(*closed[i].ideal, *closed[j].ideal) +
                    " outside I^cl = " + closed[j].ideal->to_string());
        }
    report.add(seal(std::move(ord), saw_unknown, note));

    // Membership engine must never contradict the closure engine.
    CheckRecord spot = base_record("axioms/membership-consistency", ring, cl);
    const RingPtr& R = family.front().ring();
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!closed[i].ideal) continue;
        for (const Polynomial& g : closed[i].ideal->canonical_gens())
            if (cl.membership(family[i], g, b).is_out())
                spot.witnesses.push_back("I = " + family[i].to_string() + ": engine rejects " +
                                         g.to_string() + " despite I^cl = " +
                                         closed[i].ideal->to_string());
        Polynomial unit = Polynomial::one(R);
        if (!closed[i].ideal->is_unit() && cl.membership(family[i], unit, b).is_in())
            spot.witnesses.push_back("I = " + family[i].to_string() +
                                     ": engine admits 1 despite proper I^cl");
    }
    report.add(seal(std::move(spot), false, ""));
    return report;
}

CheckReport check_basics(const ClosureOperation& cl, const std::vector<Ideal>& family,
                         const Budget& b) {
    require_one_ring(family);
    const std::string ring = ring_label(family);
    CheckReport report;

    std::vector<Evaluated> closed;
    bool saw_unknown = false;
    std::string note;
    for (const Ideal& I : family) {
        closed.push_back(eval_closure(cl, I, b));
        if (!closed.back().ideal) { saw_unknown = true; note = closed.back().note; }
    }

    // (1) pairwise intersections of closed ideals stay closed
    CheckRecord meet2 = base_record("basics/intersections-closed", ring, cl);
    bool unknown1 = saw_unknown;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (!closed[i].ideal || !closed[j].ideal) continue;
            Ideal cap = ideal_intersection(*closed[i].ideal, *closed[j].ideal);
            Evaluated capcl = eval_closure(cl, cap, b);
            if (!capcl.ideal) { unknown1 = true; note = capcl.note; continue; }
            if (!(*capcl.ideal == cap))
                meet2.witnesses.push_back("I^cl = " + closed[i].ideal->to_string() +
                                          ", J^cl = " + closed[j].ideal->to_string() +
                                          ": the meet " + cap.to_string() +
                                          " closes up to " + capcl.ideal->to_string());
        }
    report.add(seal(std::move(meet2), unknown1, note));

    // (2) the intersection of the whole closed family stays closed
    CheckRecord meetall = base_record("basics/family-meet-closed", ring, cl);
    bool unknown2 = saw_unknown;
    if (!saw_unknown) {
        Ideal acc = *closed[0].ideal;
        for (std::size_t i = 1; i < family.size(); ++i)
            acc = ideal_intersection(acc, *closed[i].ideal);
        Evaluated acccl = eval_closure(cl, acc, b);
        if (!acccl.ideal) { unknown2 = true; note = acccl.note; }
        else if (!(*acccl.ideal == acc))
            meetall.witnesses.push_back("meet of all closures = " + acc.to_string() +
                                        " closes up to " + acccl.ideal->to_string());
    }
    report.add(seal(std::move(meetall), unknown2, note));

    // (3) I^cl is the meet of the family's closed ideals above I; relative to
    // the family, since the full closed collection is not enumerable here
    CheckRecord hull = base_record("basics/closed-hull", ring, cl);
    hull.extra.emplace_back("scope", "relative to the family's closed sets");
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!closed[i].ideal) continue;
        std::optional<Ideal> meet;
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (!closed[j].ideal || !closed[j].ideal->contains(family[i])) continue;
            meet = meet ? ideal_intersection(*meet, *closed[j].ideal) : *closed[j].ideal;
        }
        if (!meet || !(*meet == *closed[i].ideal))
            hull.witnesses.push_back("I = " + family[i].to_string() + ": hull meet " +
                                     (meet ? meet->to_string() : std::string("(none)")) +
                                     " differs from I^cl = " + closed[i].ideal->to_string());
    }
    report.add(seal(std::move(hull), saw_unknown, note));

    // (4) (sum of closures)^cl = (sum of ideals)^cl, pairwise and in full
    CheckRecord sums = base_record("basics/sum-identity", ring, cl);
    bool unknown4 = saw_unknown;
    auto check_sum = [&](const std::vector<std::size_t>& idx, const std::string& tag) {
        Ideal plain = family[idx[0]];
        std::optional<Ideal> withcl = closed[idx[0]].ideal;
        for (std::size_t k = 1; k < idx.size(); ++k) {
            plain = ideal_sum(plain, family[idx[k]]);
            if (withcl && closed[idx[k]].ideal)
                withcl = ideal_sum(*withcl, *closed[idx[k]].ideal);
            else
                withcl.reset();
        }
        if (!withcl) { unknown4 = true; return; }
        Evaluated lhs = eval_closure(cl, *withcl, b);
        Evaluated rhs = eval_closure(cl, plain, b);
        if (!lhs.ideal || !rhs.ideal) {
            unknown4 = true;
            note = lhs.ideal ? rhs.note : lhs.note;
            return;
        }
        if (!(*lhs.ideal == *rhs.ideal))
            sums.witnesses.push_back(tag + ": (sum of closures)^cl = " + lhs.ideal->to_string() +
                                     " but (sum)^cl = " + rhs.ideal->to_string());
    };
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            check_sum({i, j}, family[i].to_string() + " + " + family[j].to_string());
    if (family.size() > 2) {
        std::vector<std::size_t> all(family.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        check_sum(all, "whole family");
    }
    report.add(seal(std::move(sums), unknown4, note));
    return report;
}

CheckReport semiprime_check(const ClosureOperation& cl,
                            const std::vector<std::pair<Ideal, Ideal>>& pairs,
                            const Budget& b) {
    if (pairs.empty()) throw domain_error("checker: no pairs given");
    const RingPtr& R = pairs.front().first.ring();
    CheckReport report;
    CheckRecord rec = base_record("semiprime", R->describe(), cl);
    bool saw_unknown = false;
    std::string note;
    for (const auto& [I, J] : pairs) {
        if (!same_ring(I.ring(), R) || !same_ring(J.ring(), R))
            throw ring_mismatch_error("checker: pair spans several rings");
        Evaluated Jcl = eval_closure(cl, J, b);
        Evaluated prodcl = eval_closure(cl, ideal_product(I, J), b);
        if (!Jcl.ideal || !prodcl.ideal) {
            saw_unknown = true;
            note = Jcl.ideal ? prodcl.note : Jcl.note;
            continue;
        }
        Ideal lhs = ideal_product(I, *Jcl.ideal);
        if (!prodcl.ideal->contains(lhs))
            rec.witnesses.push_back("I = " + I.to_string() + ", J = " + J.to_string() +
                                    ": " + missing_gen(lhs, *prodcl.ideal) +
                                    " lies in I*J^cl but not in (IJ)^cl = " +
                                    prodcl.ideal->to_string());
    }
    report.add(seal(std::move(rec), saw_unknown, note));
    return report;
}

CheckReport semiprime_check(const ClosureOperation& cl, const std::vector<Ideal>& family,
                            const Budget& b) {
    require_one_ring(family);
    std::vector<std::pair<Ideal, Ideal>> pairs;
    for (const Ideal& I : family)
        for (const Ideal& J : family) pairs.emplace_back(I, J);
    return semiprime_check(cl, pairs, b);
}

namespace {

void require_regular(const Polynomial& x) {
    Ideal zero(x.ring(), {});
    if (!(ideal_colon(zero, Ideal(x.ring(), {x})) == zero))
        throw domain_error("checker: " + x.to_string() + " is a zerodivisor");
}

}  // namespace

CheckReport star_check(const ClosureOperation& cl, const Ideal& J, const Polynomial& x,
                       const Budget& b) {
    require_regular(x);
    CheckReport report;
    CheckRecord rec = base_record("star", J.ring()->describe(), cl);
    rec.extra.emplace_back("x", x.to_string());
    Evaluated lhs = eval_closure(cl, ideal_scale(x, J), b);
    Evaluated Jcl = eval_closure(cl, J, b);
    if (!lhs.ideal || !Jcl.ideal) {
        report.add(seal(std::move(rec), true, lhs.ideal ? Jcl.note : lhs.note));
        return report;
    }
    Ideal rhs = ideal_scale(x, *Jcl.ideal);
    if (!(*lhs.ideal == rhs))
        rec.witnesses.push_back("(xJ)^cl = " + lhs.ideal->to_string() +
                                " but x*(J^cl) = " + rhs.to_string());
    report.add(seal(std::move(rec), false, ""));
    return report;
}

CheckReport hash_property_check(const ClosureOperation& cl, const Ideal& I,
                                const Polynomial& x, const Budget& b) {
    require_regular(x);
    CheckReport report;
    CheckRecord rec = base_record("hash", I.ring()->describe(), cl);
    rec.extra.emplace_back("x", x.to_string());
    Evaluated Icl = eval_closure(cl, I, b);
    Evaluated xIcl = eval_closure(cl, ideal_scale(x, I), b);
    if (!Icl.ideal || !xIcl.ideal) {
        report.add(seal(std::move(rec), true, Icl.ideal ? xIcl.note : Icl.note));
        return report;
    }
    Ideal rhs = ideal_colon(*xIcl.ideal, Ideal(I.ring(), {x}));
    if (!(*Icl.ideal == rhs))
        rec.witnesses.push_back("I^cl = " + Icl.ideal->to_string() +
                                " but ((xI)^cl : x) = " + rhs.to_string());
    report.add(seal(std::move(rec), false, ""));
    return report;
}

std::string CompareResult::to_string() const {
    switch (outcome) {
        case CompareOutcome::equal: return "=";
        case CompareOutcome::less: return "<=";
        case CompareOutcome::greater: return ">=";
        default: return "incomparable";
    }
}

CompareResult compare(const ClosureOperation& a, const ClosureOperation& c,
                      const std::vector<Ideal>& family, const Budget& b) {
    require_one_ring(family);
    bool le = true, ge = true;
    CompareResult result;
    for (const Ideal& I : family) {
        Ideal ca = a.closure(I, b);
        Ideal cc = c.closure(I, b);
        if (le && !cc.contains(ca)) {
            le = false;
            result.witnesses.push_back("at I = " + I.to_string() + ": " + a.name() +
                                       " gives " + ca.to_string() + ", not inside " +
                                       cc.to_string());
        }
        if (ge && !ca.contains(cc)) {
            ge = false;
            result.witnesses.push_back("at I = " + I.to_string() + ": " + c.name() +
                                       " gives " + cc.to_string() + ", not inside " +
                                       ca.to_string());
        }
    }
    result.outcome = le ? (ge ? CompareOutcome::equal : CompareOutcome::less)
                        : (ge ? CompareOutcome::greater : CompareOutcome::incomparable);
    return result;
}

}  // namespace idealclose
