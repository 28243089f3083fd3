#include "doctest.h"
#include "idealclose/closure.hpp"

#include <vector>

using namespace idealclose;

namespace {

// Not a closure: colon by a fixed ideal, the raw single step of saturation.
ClosureOperation colon_by(const Ideal& a) {
    return ClosureOperation(
        "colon(" + a.to_string() + ")", nullptr,
        [a](const Ideal& I, const Budget&) { return ideal_colon(I, a); });
}

// Not order-preserving: grows one designated ideal and nothing else.
ClosureOperation bump_at(const Ideal& target, const Ideal& extra) {
    return ClosureOperation(
        "bump", nullptr, [target, extra](const Ideal& I, const Budget&) {
            return I == target ? ideal_sum(I, extra) : I;
        });
}

std::vector<Ideal> family_of(const RingPtr& R,
                             const std::vector<std::vector<std::string>>& gens) {
    std::vector<Ideal> out;
    for (const auto& g : gens) out.push_back(ideal_from_strings(R, g));
    return out;
}

RingPtr quot(std::uint32_t p, const std::vector<std::string>& vars,
             const std::vector<std::string>& rels) {
    return make_quotient_ring(make_poly_ring(p, vars), rels);
}

}  // namespace

TEST_CASE("verdicts and budgets") {
    CHECK(Verdict::in().is_in());
    CHECK(Verdict::out().decided());
    Verdict u = Verdict::unknown(UnknownReason::budget_exhausted);
    CHECK(u.is_unknown());
    CHECK(u.reason() == UnknownReason::budget_exhausted);
    CHECK(u.to_string() == "unknown(budget-exhausted)");
    CHECK(Verdict::in().to_string() == "in");
    CHECK(Verdict::in() != Verdict::out());
    CHECK_THROWS_AS(Verdict::in().reason(), domain_error);

    Budget b;
    CHECK(b.e_max == 6);
    CHECK(b.n_max == 8);
    b.validate();
    CHECK(b.to_string() == "e_max=6,n_max=8,word_max=4,mono_max=200000");
    Budget bad;
    bad.e_max = 0;
    CHECK_THROWS_AS(bad.validate(), domain_error);
}

TEST_CASE("identity and indiscrete satisfy everything") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto family = family_of(R, {{"x"}, {"y"}, {"x", "y"}, {"x^2*y"}});

    ClosureOperation id = identity_closure();
    CHECK(check_axioms(id, family).all_passed());
    CHECK(check_basics(id, family).all_passed());
    CHECK(semiprime_check(id, family).all_passed());

    ClosureOperation top = indiscrete_closure();
    CHECK(check_axioms(top, family).all_passed());
    CHECK(check_basics(top, family).all_passed());
    CHECK(semiprime_check(top, family).all_passed());

    // every closure sits between them
    CHECK(compare(id, top, family).outcome == CompareOutcome::less);
    CHECK(compare(top, id, family).outcome == CompareOutcome::greater);
    CHECK(compare(id, id, family).outcome == CompareOutcome::equal);
}

TEST_CASE("axiom checker catches the independence examples") {
    SUBCASE("colon by x is not idempotent on F2[x]/(x^3)") {
        auto R = quot(2, {"x"}, {"x^3"});
        ClosureOperation op = colon_by(ideal_from_strings(R, {"x"}));
        // ((x^2 : x) : x) = ((x) : x) = R, one colon step is not enough
        auto family = family_of(R, {{"x^2"}});
        CheckReport rep = check_axioms(op, family);
        const CheckRecord* idem = rep.find("axioms/idempotence");
        REQUIRE(idem != nullptr);
        CHECK(idem->status == "fail");
        // extension still holds: I : x contains I
        CHECK(rep.find("axioms/extension")->status == "pass");
    }
    SUBCASE("a bump map is not order-preserving") {
        auto R = make_poly_ring(0, {"x", "y"});
        Ideal small = ideal_from_strings(R, {"x"});
        Ideal big = ideal_from_strings(R, {"x", "y^2"});
        ClosureOperation op = bump_at(small, ideal_from_strings(R, {"y"}));
        // (x) grows to (x, y) which escapes (x, y^2)
        CheckReport rep = check_axioms(op, {small, big});
        CHECK(rep.find("axioms/order-preservation")->status == "fail");
        CHECK(rep.find("axioms/extension")->status == "pass");
        CHECK(rep.find("axioms/idempotence")->status == "pass");
    }
    SUBCASE("squaring is not extensive") {
        auto R = make_poly_ring(0, {"x"});
        ClosureOperation op("square", nullptr, [](const Ideal& I, const Budget&) {
            return ideal_product(I, I);
        });
        CheckReport rep = check_axioms(op, family_of(R, {{"x"}}));
        CHECK(rep.find("axioms/extension")->status == "fail");
        CHECK(rep.has_failure());
    }
    SUBCASE("membership engines may not contradict the closure engine") {
        auto R = make_poly_ring(0, {"x"});
        ClosureOperation broken(
            "broken",
            [](const Ideal&, const Polynomial&, const Budget&) { return Verdict::out(); },
            [](const Ideal& I, const Budget&) { return I; });
        CheckReport rep = check_axioms(broken, family_of(R, {{"x"}}));
        CHECK(rep.find("axioms/membership-consistency")->status == "fail");
    }
    SUBCASE("membership-only operations report unknown") {
        auto R = make_poly_ring(0, {"x"});
        ClosureOperation partial(
            "partial",
            [](const Ideal& I, const Polynomial& f, const Budget&) {
                return I.contains(f) ? Verdict::in()
                                     : Verdict::unknown(UnknownReason::not_implemented);
            },
            nullptr);
        CheckReport rep = check_axioms(partial, family_of(R, {{"x"}}));
        CHECK(rep.has_unknown());
        CHECK_FALSE(rep.all_passed());
        CHECK_FALSE(rep.has_failure());
    }
    SUBCASE("budget exhaustion surfaces as unknown, never as pass") {
        auto R = make_poly_ring(0, {"x"});
        ClosureOperation starving("starving", nullptr,
                                  [](const Ideal&, const Budget&) -> Ideal {
                                      throw resource_error("out of road");
                                  });
        CheckReport rep = check_axioms(starving, family_of(R, {{"x"}}));
        CHECK(rep.has_unknown());
        CHECK_FALSE(rep.has_failure());
        CHECK_FALSE(rep.all_passed());
    }
}

TEST_CASE("saturation built as the hull of a colon step") {
    auto R = make_poly_ring(0, {"x", "y"});
    Ideal ax = ideal_from_strings(R, {"x"});
    ClosureOperation sat = idempotent_hull(colon_by(ax));
    CHECK(sat.name() == "hull(colon((x)))");

    // ((x*y) : x^inf) = (y) and (y) is already saturated
    Ideal xy = ideal_from_strings(R, {"x*y"});
    Ideal y = ideal_from_strings(R, {"y"});
    CHECK(sat.closure(xy, {}) == y);
    CHECK(sat.closure(y, {}) == y);
    CHECK(sat.membership(xy, parse_polynomial(R, "y"), {}).is_in());
    CHECK(sat.membership(xy, parse_polynomial(R, "x"), {}).is_out());

    // same answers as the direct saturation engine on a mixed family
    for (const char* gens : {"x^2*y", "x*y", "y", "x^3"}) {
        Ideal I = ideal_from_strings(R, {gens});
        CHECK(sat.closure(I, {}) == ideal_saturation(I, ax));
    }

    auto family = family_of(R, {{"x*y"}, {"y"}});
    CHECK(check_axioms(sat, family).all_passed());
    // sum identity: both routes end at ((x*y) + (y))^sat = (y)
    CHECK(check_basics(sat, family).all_passed());
    CHECK(semiprime_check(sat, family).all_passed());
}

TEST_CASE("hull diagnostics") {
    SUBCASE("hull of a closure is that closure") {
        auto R = make_poly_ring(0, {"x", "y"});
        ClosureOperation h = idempotent_hull(identity_closure());
        auto family = family_of(R, {{"x"}, {"x", "y"}});
        CHECK(compare(h, identity_closure(), family).outcome == CompareOutcome::equal);
    }
    SUBCASE("iterating colon by x sweeps F2[x]/(x^3) up to R") {
        auto R = quot(2, {"x"}, {"x^3"});
        ClosureOperation h = idempotent_hull(colon_by(ideal_from_strings(R, {"x"})));
        // (0) -> (x^2) -> (x) -> R -> R
        Ideal zero(R, {});
        CHECK(h.closure(zero, {}).is_unit());
        CHECK(h.closure(zero, {}) == ideal_saturation(zero, ideal_from_strings(R, {"x"})));
    }
    SUBCASE("non-extensive input is rejected") {
        auto R = make_poly_ring(0, {"x"});
        ClosureOperation sq("square", nullptr, [](const Ideal& I, const Budget&) {
            return ideal_product(I, I);
        });
        ClosureOperation h = idempotent_hull(sq);
        CHECK_THROWS_AS(h.closure(ideal_from_strings(R, {"x"}), {}), domain_error);
    }
}

TEST_CASE("module construction on quotient rings") {
    SUBCASE("colon form reproduces the basically full closure") {
        // R = F2[x,y]/(x^2,xy): (my : m) = (x,y) even though y is principal
        auto R = quot(2, {"x", "y"}, {"x^2", "x*y"});
        Ideal m = ideal_from_strings(R, {"x", "y"});
        ClosureOperation bf = construct_from_module(m);
        CHECK(bf.claims_semi_prime());
        Ideal y = ideal_from_strings(R, {"y"});
        CHECK(bf.closure(y, {}) == ideal_from_strings(R, {"x", "y"}));
        CHECK(bf.membership(y, parse_polynomial(R, "x"), {}).is_in());
    }
    SUBCASE("the same closure downstream loses x") {
        // S = F2[x,y,z]/(x^2,xy,z^2): (ny : n) = (y, xz) and x stays outside
        auto S = quot(2, {"x", "y", "z"}, {"x^2", "x*y", "z^2"});
        Ideal n = ideal_from_strings(S, {"x", "y", "z"});
        ClosureOperation bf = construct_from_module(n);
        Ideal y = ideal_from_strings(S, {"y"});
        Ideal closed = bf.closure(y, {});
        CHECK(closed == ideal_from_strings(S, {"y", "x*z"}));
        CHECK_FALSE(closed.contains(parse_polynomial(S, "x")));
    }
    SUBCASE("quotient module form just adds the ideal") {
        auto R = make_poly_ring(0, {"x", "y"});
        ClosureOperation c = construct_from_module_quotient(ideal_from_strings(R, {"x"}));
        CHECK(c.closure(ideal_from_strings(R, {"y"}), {}) ==
              ideal_from_strings(R, {"x", "y"}));
        // dividing by the zero module changes nothing
        ClosureOperation c0 = construct_from_module_quotient(Ideal(R, {}));
        auto family = family_of(R, {{"x"}, {"x", "y"}, {"y^2"}});
        CHECK(compare(c0, identity_closure(), family).outcome == CompareOutcome::equal);
        CHECK(check_axioms(c, family).all_passed());
        CHECK(semiprime_check(c, family).all_passed());
    }
}

TEST_CASE("contraction along ring maps") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto S = make_quotient_ring(R, std::vector<std::string>{"x"});
    RingMap pi(R, S, {parse_polynomial(S, "x"), parse_polynomial(S, "y")});

    SUBCASE("preimage through a quotient surjection") {
        ClosureOperation c = construct_contraction(pi, identity_closure());
        CHECK(c.has_closure_engine());
        // pulling (y) back through R -> R/(x) picks up the kernel
        CHECK(c.closure(ideal_from_strings(R, {"y"}), {}) ==
              ideal_from_strings(R, {"x", "y"}));
        CHECK(c.membership(ideal_from_strings(R, {"y"}), parse_polynomial(R, "x"), {})
                  .is_in());
        CHECK(c.membership(ideal_from_strings(R, {"y"}), parse_polynomial(R, "y + 1"), {})
                  .is_out());
        auto family = family_of(R, {{"y"}, {"x", "y"}, {"y^2"}});
        CHECK(check_axioms(c, family).all_passed());
    }
    SUBCASE("identity map gives the operation back") {
        RingMap self(R, R, {parse_polynomial(R, "x"), parse_polynomial(R, "y")});
        ClosureOperation c = construct_contraction(self, identity_closure());
        auto family = family_of(R, {{"x"}, {"x^2", "y"}});
        CHECK(compare(c, identity_closure(), family).outcome == CompareOutcome::equal);
    }
    SUBCASE("non-surjections answer membership only") {
        auto T = make_poly_ring(0, {"x", "y", "z"});
        RingMap incl(R, T, {parse_polynomial(T, "x"), parse_polynomial(T, "y")});
        ClosureOperation c = construct_contraction(incl, identity_closure());
        CHECK_FALSE(c.has_closure_engine());
        CHECK(c.membership(ideal_from_strings(R, {"x"}), parse_polynomial(R, "x"), {})
                  .is_in());
        CheckReport rep = check_axioms(c, family_of(R, {{"x"}}));
        CHECK(rep.has_unknown());
    }
}

TEST_CASE("meets and directed unions of closures") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto family = family_of(R, {{"x"}, {"x*y"}, {"x", "y"}});

    SUBCASE("meet with the indiscrete closure is absorbed") {
        ClosureOperation c = construct_from_module_quotient(ideal_from_strings(R, {"x"}));
        ClosureOperation met = construct_intersection({c, indiscrete_closure()});
        CHECK(met.name() == "meet(modclosure(R/(x)),indiscrete)");
        CHECK(compare(met, c, family).outcome == CompareOutcome::equal);
        CHECK(met.claims_semi_prime());
        CHECK(check_axioms(met, family).all_passed());
    }
    SUBCASE("meet membership is a conjunction") {
        ClosureOperation cx = construct_from_module_quotient(ideal_from_strings(R, {"x"}));
        ClosureOperation cy = construct_from_module_quotient(ideal_from_strings(R, {"y"}));
        ClosureOperation met = construct_intersection({cx, cy});
        Ideal zero(R, {});
        // (0) + (x) meets (0) + (y) in (x) cap (y) = (xy)
        CHECK(met.closure(zero, {}) == ideal_from_strings(R, {"x*y"}));
        CHECK(met.membership(zero, parse_polynomial(R, "x*y"), {}).is_in());
        CHECK(met.membership(zero, parse_polynomial(R, "x"), {}).is_out());
    }
    SUBCASE("a chain unions to its top") {
        ClosureOperation u = construct_directed_union({identity_closure(), indiscrete_closure()});
        CHECK(compare(u, indiscrete_closure(), family).outcome == CompareOutcome::equal);
        CHECK(u.membership(family[0], parse_polynomial(R, "y + 1"), {}).is_in());
        CHECK(check_axioms(u, family).all_passed());
    }
    SUBCASE("non-directed stages are refused with a witness") {
        ClosureOperation cx = construct_from_module_quotient(ideal_from_strings(R, {"x"}));
        ClosureOperation cy = construct_from_module_quotient(ideal_from_strings(R, {"y"}));
        ClosureOperation u = construct_directed_union({cx, cy});
        // at I = (0) the stages (x) and (y) have no common bound in the family
        CHECK_THROWS_AS(u.closure(Ideal(R, {}), {}), domain_error);
        // membership stays sound: it quantifies over the set union
        CHECK(u.membership(Ideal(R, {}), parse_polynomial(R, "x"), {}).is_in());
    }
}

TEST_CASE("finite type wrapper only changes the flag") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto family = family_of(R, {{"x"}, {"x", "y"}});
    ClosureOperation c = finite_type_cf(identity_closure());
    CHECK(c.name() == "cf(identity)");
    CHECK(c.claims_finite_type());
    CHECK(c.claims_semi_prime());
    CHECK(compare(c, identity_closure(), family).outcome == CompareOutcome::equal);
}

TEST_CASE("semiprime violations are caught") {
    auto R = make_poly_ring(0, {"x"});
    Ideal x2 = ideal_from_strings(R, {"x^2"});
    // grows (x^2) to (x): then (x)*(x) = (x^2) escapes ((x^2)*(x^2))^cl = (x^4)
    ClosureOperation op = bump_at(x2, ideal_from_strings(R, {"x"}));
    std::vector<std::pair<Ideal, Ideal>> pairs = {{x2, x2}};
    CheckReport rep = semiprime_check(op, pairs);
    CHECK(rep.has_failure());
    CHECK_FALSE(rep.records.front().witnesses.empty());

    CHECK(semiprime_check(identity_closure(), pairs).all_passed());
}

TEST_CASE("star and hash checks") {
    auto R = make_poly_ring(0, {"x", "y"});
    Ideal J = ideal_from_strings(R, {"y"});
    Polynomial x = parse_polynomial(R, "x");

    CHECK(star_check(identity_closure(), J, x).all_passed());
    CHECK(hash_property_check(identity_closure(), J, x).all_passed());

    // adding (y) commutes with multiplying by the regular element x only up
    // to the colon, which is what the hash property captures
    ClosureOperation cy = construct_from_module_quotient(ideal_from_strings(R, {"y"}));
    CHECK(hash_property_check(cy, ideal_from_strings(R, {"x^2"}), x).all_passed());
    // star fails for it: (x*(x^2) + (y)) is not x*((x^2) + (y))
    CHECK(star_check(cy, ideal_from_strings(R, {"x^2"}), x).has_failure());

    // zerodivisors are refused up front
    auto S = quot(2, {"x"}, {"x^3"});
    CHECK_THROWS_AS(star_check(identity_closure(), Ideal(S, {}),
                               parse_polynomial(S, "x")),
                    domain_error);
}

TEST_CASE("comparison outcomes carry witnesses") {
    auto R = make_poly_ring(0, {"x", "y"});
    ClosureOperation cx = construct_from_module_quotient(ideal_from_strings(R, {"x"}));
    ClosureOperation cy = construct_from_module_quotient(ideal_from_strings(R, {"y"}));
    std::vector<Ideal> family = {Ideal(R, {})};
    CompareResult r = compare(cx, cy, family);
    CHECK(r.outcome == CompareOutcome::incomparable);
    CHECK(r.witnesses.size() == 2);
    CHECK(r.to_string() == "incomparable");

    CHECK(compare(identity_closure(), cx, family).outcome == CompareOutcome::less);
    CHECK(compare(cx, identity_closure(), family).outcome == CompareOutcome::greater);
}
