#include "idealclose/closure.hpp"

#include <sstream>

namespace idealclose {

namespace {

std::string join_names(const std::vector<ClosureOperation>& cls) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (i) os << ',';
        os << cls[i].name();
    }
    return os.str();
}

constexpr std::size_t kHullCap = 256;

}  // namespace

ClosureOperation identity_closure() {
    return ClosureOperation(
        "identity",
        [](const Ideal& I, const Polynomial& f, const Budget&) {
            return I.contains(f) ? Verdict::in() : Verdict::out();
        },
        [](const Ideal& I, const Budget&) { return I; },
        /*semi_prime=*/true, /*finite_type=*/true);
}

ClosureOperation indiscrete_closure() {
    return ClosureOperation(
        "indiscrete",
        [](const Ideal&, const Polynomial&, const Budget&) { return Verdict::in(); },
        [](const Ideal& I, const Budget&) {
            return Ideal(I.ring(), {Polynomial::one(I.ring())});
        },
        /*semi_prime=*/true, /*finite_type=*/true);
}

ClosureOperation construct_from_module(const Ideal& K) {
    auto engine = [K](const Ideal& I, const Budget&) {
        return ideal_colon(ideal_product(I, K), K);
    };
    return ClosureOperation("modclosure(" + K.to_string() + ")", nullptr,
                            std::move(engine), /*semi_prime=*/true);
}

ClosureOperation construct_from_module_quotient(const Ideal& a) {
    auto engine = [a](const Ideal& I, const Budget&) { return ideal_sum(I, a); };
    return ClosureOperation("modclosure(R/" + a.to_string() + ")", nullptr,
                            std::move(engine), /*semi_prime=*/true);
}

ClosureOperation construct_contraction(const RingMap& phi, ClosureOperation d) {
    bool semi_prime = d.claims_semi_prime();
    std::string name = "contract(" + phi.to_string() + "," + d.name() + ")";
    auto member = [phi, d](const Ideal& I, const Polynomial& f, const Budget& b) {
        if (!same_ring(I.ring(), phi.source()))
            throw ring_mismatch_error("contraction: ideal is not in the source ring");
        return d.membership(phi.extend(I), phi.apply(f), b);
    };
    ClosureOperation::ClosureFn engine;
    if (phi.is_quotient_surjection() && d.has_closure_engine()) {
        engine = [phi, d](const Ideal& I, const Budget& b) {
            return phi.contract(d.closure(phi.extend(I), b));
        };
    }
    return ClosureOperation(std::move(name), std::move(member), std::move(engine),
                            semi_prime);
}

ClosureOperation construct_intersection(std::vector<ClosureOperation> cls) {
    if (cls.empty()) throw domain_error("meet: empty closure list");
    bool semi_prime = true, with_engine = true;
    for (const ClosureOperation& c : cls) {
        semi_prime = semi_prime && c.claims_semi_prime();
        with_engine = with_engine && c.has_closure_engine();
    }
    std::string name = "meet(" + join_names(cls) + ")";
    auto member = [cls](const Ideal& I, const Polynomial& f, const Budget& b) {
        bool unknown = false;
        UnknownReason why = UnknownReason::not_implemented;
        for (const ClosureOperation& c : cls) {
            Verdict v = c.membership(I, f, b);
            if (v.is_out()) return Verdict::out();
            if (v.is_unknown()) {
                unknown = true;
                if (v.reason() == UnknownReason::budget_exhausted)
                    why = UnknownReason::budget_exhausted;
            }
        }
        return unknown ? Verdict::unknown(why) : Verdict::in();
    };
    ClosureOperation::ClosureFn engine;
    if (with_engine) {
        engine = [cls](const Ideal& I, const Budget& b) {
            Ideal acc = cls.front().closure(I, b);
            for (std::size_t i = 1; i < cls.size(); ++i)
                acc = ideal_intersection(acc, cls[i].closure(I, b));
            return acc;
        };
    }
    return ClosureOperation(std::move(name), std::move(member), std::move(engine),
                            semi_prime);
}

ClosureOperation construct_directed_union(std::vector<ClosureOperation> cls) {
    if (cls.empty()) throw domain_error("union: empty closure list");
    bool semi_prime = true, with_engine = true;
    for (const ClosureOperation& c : cls) {
        semi_prime = semi_prime && c.claims_semi_prime();
        with_engine = with_engine && c.has_closure_engine();
    }
    std::string name = "union(" + join_names(cls) + ")";
    auto member = [cls](const Ideal& I, const Polynomial& f, const Budget& b) {
        bool unknown = false;
        UnknownReason why = UnknownReason::not_implemented;
        for (const ClosureOperation& c : cls) {
            Verdict v = c.membership(I, f, b);
            if (v.is_in()) return Verdict::in();
            if (v.is_unknown()) {
                unknown = true;
                if (v.reason() == UnknownReason::budget_exhausted)
                    why = UnknownReason::budget_exhausted;
            }
        }
        return unknown ? Verdict::unknown(why) : Verdict::out();
    };
    ClosureOperation::ClosureFn engine;
    if (with_engine) {
        engine = [cls](const Ideal& I, const Budget& b) {
            std::vector<Ideal> stages;
            stages.reserve(cls.size());
            for (const ClosureOperation& c : cls) stages.push_back(c.closure(I, b));
            // directedness on this instance: every pairwise join must be
            // dominated by some member stage
            for (std::size_t i = 0; i < stages.size(); ++i)
                for (std::size_t j = i + 1; j < stages.size(); ++j) {
                    Ideal join = ideal_sum(stages[i], stages[j]);
                    bool dominated = false;
                    for (const Ideal& s : stages)
                        if (s.contains(join)) { dominated = true; break; }
                    if (!dominated)
                        throw domain_error("union: stages of " + cls[i].name() + " and " +
                                           cls[j].name() + " at I = " + I.to_string() +
                                           " have no common bound in the family");
                }
            Ideal acc = stages.front();
            for (std::size_t i = 1; i < stages.size(); ++i)
                acc = ideal_sum(acc, stages[i]);
            return acc;
        };
    }
    return ClosureOperation(std::move(name), std::move(member), std::move(engine),
                            semi_prime);
}

ClosureOperation idempotent_hull(ClosureOperation d) {
    if (!d.has_closure_engine())
        throw domain_error("hull: " + d.name() + " has no closure engine");
    std::string name = "hull(" + d.name() + ")";
    bool semi_prime = d.claims_semi_prime();
    auto engine = [d](const Ideal& I, const Budget& b) {
        Ideal cur = I;
        for (std::size_t iter = 0; iter < kHullCap; ++iter) {
            Ideal next = d.closure(cur, b);
            if (!next.contains(cur))
                throw domain_error("hull: " + d.name() + " is not extensive at " +
                                   cur.to_string());
            if (next == cur) return cur;
            cur = std::move(next);
        }
        throw resource_error("hull: no fixpoint within " + std::to_string(kHullCap) +
                             " iterations of " + d.name());
    };
    return ClosureOperation(std::move(name), nullptr, std::move(engine), semi_prime);
}

ClosureOperation finite_type_cf(ClosureOperation cl) {
    // Noetherian collapse: every ideal is finitely generated, so restricting
    // the defining quantifier to finitely generated subideals changes nothing.
    std::string name = "cf(" + cl.name() + ")";
    auto member = [cl](const Ideal& I, const Polynomial& f, const Budget& b) {
        return cl.membership(I, f, b);
    };
    ClosureOperation::ClosureFn engine;
    if (cl.has_closure_engine())
        engine = [cl](const Ideal& I, const Budget& b) { return cl.closure(I, b); };
    return ClosureOperation(std::move(name), std::move(member), std::move(engine),
                            cl.claims_semi_prime(), /*finite_type=*/true);
}

}  // namespace idealclose
