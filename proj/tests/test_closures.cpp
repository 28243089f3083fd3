#include "doctest.h"
#include "idealclose/closures.hpp"

#include <random>
#include <vector>

using namespace idealclose;

namespace {

RingPtr quot(std::uint32_t p, const std::vector<std::string>& vars,
             const std::vector<std::string>& rels) {
    return make_quotient_ring(make_poly_ring(p, vars), rels);
}

Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
    return ideal_from_strings(R, gens);
}

Polynomial poly(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

}  // namespace

TEST_CASE("radical of monomial ideals") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto rad = radical_closure();
    CHECK(rad.name() == "radical");
    CHECK(rad.claims_semi_prime());

    // sqrt((x^2, x y^3)) = (x, xy) = (x)
    Ideal I = ideal_of(R, {"x^2", "x*y^3"});
    CHECK(rad.closure(I) == ideal_of(R, {"x"}));
    CHECK(rad.membership(I, poly(R, "x")).is_in());
    CHECK(rad.membership(I, poly(R, "y")).is_out());

    CHECK(rad.closure(Ideal::unit(R)) == Ideal::unit(R));
    CHECK(rad.closure(Ideal::zero(R)) == Ideal::zero(R));

    SUBCASE("generator route matches the trick-variable route on a box") {
        for (const auto& gens :
             {std::vector<std::string>{"x^2", "x*y^3"}, {"x^3", "y^2"}, {"x^2*y^2"}}) {
            Ideal J = ideal_of(R, gens);
            Ideal rt = rad.closure(J);
            for (std::uint32_t a = 0; a <= 4; ++a) {
                for (std::uint32_t b = 0; b <= 4; ++b) {
                    Polynomial u = Polynomial::term(R, Monomial({a, b}), Rational(1));
                    CHECK(rt.contains(u) == radical_membership(u, J));
                }
            }
        }
    }

    SUBCASE("generator computation stays within its domain") {
        CHECK_THROWS_AS(rad.closure(Ideal(R, {poly(R, "x + y^2")})), domain_error);
        auto S = quot(2, {"x"}, {"x^3"});
        CHECK_THROWS_AS(rad.closure(Ideal::zero(S)), domain_error);
        // membership still decides on quotients: sqrt((0)) in F2[x]/(x^3)
        CHECK(rad.membership(Ideal::zero(S), poly(S, "x")).is_in());
        CHECK(rad.membership(Ideal::zero(S), poly(S, "x + 1")).is_out());
    }

    SUBCASE("axioms, basics, semiprime on a monomial family") {
        std::vector<Ideal> fam = {ideal_of(R, {"x"}), ideal_of(R, {"x^2", "x*y"}),
                                  ideal_of(R, {"x^2", "y^2"}), ideal_of(R, {"x^3"})};
        CHECK(check_axioms(rad, fam).all_passed());
        CHECK(check_basics(rad, fam).all_passed());
        CHECK(semiprime_check(rad, fam).all_passed());
    }
}

TEST_CASE("radical on finite rings is the nilpotency filter") {
    auto R = quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto F = FiniteRing::build(R);
    auto rad = radical_closure(F);

    // every element of m squares to zero, so sqrt((0)) = m = nilradical
    Ideal m = ideal_of(R, {"x", "y"});
    CHECK(rad.closure(Ideal::zero(R)) == m);
    CHECK(rad.closure(Ideal::zero(R)) == F.to_ideal(F.nilradical()));
    // y^2 = 0 lands in (x), so sqrt((x)) is already m
    CHECK(rad.closure(ideal_of(R, {"x"})) == m);
    CHECK(rad.closure(m) == m);
    CHECK(rad.membership(Ideal::zero(R), poly(R, "x + y")).is_in());
    CHECK(rad.membership(Ideal::zero(R), poly(R, "1 + x")).is_out());
}

TEST_CASE("saturation closure") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto sat = saturation_closure(ideal_of(R, {"x"}));
    CHECK(sat.name() == "sat((x))");

    // (x^2 y : x^inf) = (y)
    CHECK(sat.closure(ideal_of(R, {"x^2*y"})) == ideal_of(R, {"y"}));
    CHECK(sat.membership(ideal_of(R, {"x^2*y"}), poly(R, "y")).is_in());
    CHECK(sat.membership(ideal_of(R, {"x^2*y"}), poly(R, "x")).is_out());

    for (const auto& gens : {std::vector<std::string>{"x*y"}, {"x^3"}, {"y"}}) {
        Ideal I = ideal_of(R, gens);
        CHECK(sat.closure(I) == ideal_saturation(I, ideal_of(R, {"x"})));
    }
    std::vector<Ideal> fam = {ideal_of(R, {"x^2*y"}), ideal_of(R, {"y"})};
    CHECK(check_axioms(sat, fam).all_passed());
    CHECK(semiprime_check(sat, fam).all_passed());
}

TEST_CASE("frobenius closure in regular and quotient rings") {
    auto R = make_poly_ring(2, {"x", "y"});
    auto fr = frobenius_closure();
    CHECK(fr.name() == "frob");
    CHECK(frobenius_closure(3).name() == "frob(3)");

    // free polynomial rings over F_p are regular: flatness of Frobenius
    // forces f^q in I^[q] => f in I, so the closure is the identity and
    // out-verdicts are certified
    Ideal I = ideal_of(R, {"x^2", "y^2"});
    CHECK(fr.closure(I) == I);
    CHECK(fr.membership(I, poly(R, "x*y")).is_out());
    CHECK(fr.membership(I, poly(R, "x^2")).is_in());
    CHECK(check_axioms(fr, {I, ideal_of(R, {"x", "y"})}).all_passed());

    SUBCASE("proper quotients get stage search with honest unknowns") {
        auto S = quot(2, {"x", "y"}, {"x^2", "x*y"});
        // x^2 = 0 lands x in (0)^F at stage 1; y never shows up but the
        // search cannot certify that
        CHECK(fr.membership(Ideal::zero(S), poly(S, "x")).is_in());
        Verdict v = fr.membership(Ideal::zero(S), poly(S, "y"));
        CHECK(v.is_unknown());
        CHECK(v.reason() == UnknownReason::budget_exhausted);
        CHECK_THROWS_AS(fr.closure(Ideal::zero(S)), domain_error);
    }

    SUBCASE("characteristic zero is rejected") {
        auto Q = make_poly_ring(0, {"x"});
        CHECK_THROWS_AS(fr.closure(Ideal::zero(Q)), domain_error);
        CHECK_THROWS_AS(fr.membership(Ideal::zero(Q), poly(Q, "x")), domain_error);
    }
}

TEST_CASE("frobenius closure on finite rings is exact") {
    SUBCASE("square-zero maximal ideal") {
        auto R = quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"});
        auto F = FiniteRing::build(R);
        auto fr = frobenius_closure(F);
        Ideal m = ideal_of(R, {"x", "y"});
        // every f in m has f^2 = 0 in 0^[2], so (0)^F = m; same for (x)^F
        CHECK(fr.closure(Ideal::zero(R)) == m);
        CHECK(fr.closure(ideal_of(R, {"x"})) == m);
        CHECK(fr.closure(m) == m);
        CHECK(fr.membership(Ideal::zero(R), poly(R, "y")).is_in());
        CHECK(fr.membership(Ideal::zero(R), poly(R, "1 + y")).is_out());
    }

    SUBCASE("chain ring needs stage two") {
        auto R = quot(2, {"x"}, {"x^3"});
        auto F = FiniteRing::build(R);
        auto fr = frobenius_closure(F);
        // (x^2)^[2] = (x^4) = 0 and (a+bx+cx^2)^2 = a^2 + b^2 x^2, so stage 1
        // only reaches (x^2); stage 2 kills all of (x) since r^4 = a^4
        CHECK(fr.closure(ideal_of(R, {"x^2"})) == ideal_of(R, {"x"}));
        CHECK(fr.closure(Ideal::zero(R)) == ideal_of(R, {"x"}));
        CHECK(fr.closure(ideal_of(R, {"x"})) == ideal_of(R, {"x"}));
    }
}

TEST_CASE("frobenius stages are increasing and union to the closure") {
    auto R = quot(2, {"x"}, {"x^3"});
    auto F = FiniteRing::build(R);
    auto lattice = enumerate_ideals(F);

    for (const auto& s : lattice.ideals) {
        Ideal I = F.to_ideal(s);
        Ideal prev = frobenius_stage(0, F).closure(I);
        CHECK(prev == I);  // stage 0 is the identity
        for (std::uint32_t e = 1; e <= 3; ++e) {
            Ideal cur = frobenius_stage(e, F).closure(I);
            CHECK(cur.contains(prev));
            prev = cur;
        }
    }

    std::vector<ClosureOperation> stages;
    for (std::uint32_t e = 0; e <= 3; ++e) stages.push_back(frobenius_stage(e, F));
    auto united = construct_directed_union(std::move(stages));
    auto fr = frobenius_closure(F);
    for (const auto& s : lattice.ideals) {
        Ideal I = F.to_ideal(s);
        CHECK(united.closure(I) == fr.closure(I));
    }

    // fixed-stage membership is exact even on infinite quotients
    auto S = quot(2, {"x", "y"}, {"x^2", "x*y"});
    CHECK(frobenius_stage(1).membership(Ideal::zero(S), poly(S, "x")).is_in());
    CHECK(frobenius_stage(1).membership(Ideal::zero(S), poly(S, "y")).is_out());
}

TEST_CASE("newton polyhedron integral closure") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto ic = integral_closure_op();
    CHECK(ic.name() == "intclosure");

    // (1,1) = ((2,0)+(0,2))/2, so xy joins (x^2, y^2)
    CHECK(integral_closure_monomial(ideal_of(R, {"x^2", "y^2"})) ==
          ideal_of(R, {"x^2", "x*y", "y^2"}));
    CHECK(integral_closure_monomial(ideal_of(R, {"x"})) == ideal_of(R, {"x"}));
    CHECK(integral_closure_monomial(ideal_of(R, {"x^3", "y^3"})) ==
          ideal_of(R, {"x^3", "x^2*y", "x*y^2", "y^3"}));

    CHECK(ic.membership(ideal_of(R, {"x^2", "y^2"}), poly(R, "x*y")).is_in());
    CHECK(ic.membership(ideal_of(R, {"x"}), poly(R, "y")).is_out());
    // non-monomial data is out of the engine's reach but never mislabeled
    CHECK(ic.membership(ideal_of(R, {"x^2", "y^2"}), poly(R, "x + y")).is_unknown());
    CHECK_THROWS_AS(ic.closure(Ideal(R, {poly(R, "x + y")})), domain_error);

    SUBCASE("closure is idempotent and budget-guarded") {
        Ideal I = ideal_of(R, {"x^2", "y^2"});
        Ideal c = ic.closure(I);
        CHECK(ic.closure(c) == c);
        Budget tiny;
        tiny.mono_max = 4;  // the 3x3 box does not fit
        CHECK_THROWS_AS(ic.closure(I, tiny), resource_error);
    }

    SUBCASE("axioms and semiprime on monomial families") {
        std::vector<Ideal> fam = {ideal_of(R, {"x^2", "y^2"}), ideal_of(R, {"x^3", "y^3"}),
                                  ideal_of(R, {"x"})};
        CHECK(check_axioms(ic, fam).all_passed());
        CHECK(semiprime_check(ic, fam).all_passed());
        // radical dominates integral closure on this family
        auto cmp = compare(ic, radical_closure(), fam);
        CHECK(cmp.outcome == CompareOutcome::less);
    }
}

TEST_CASE("power oracle against newton membership") {
    auto R = make_poly_ring(0, {"x", "y"});
    Ideal I = ideal_of(R, {"x^2", "y^2"});
    // (xy)^2 = x^2 y^2 in I^2 certifies membership at n = 2, not n = 1
    CHECK(integral_membership_oracle(poly(R, "x*y"), I, 2).is_in());
    CHECK(integral_membership_oracle(poly(R, "x*y"), I, 1).is_unknown());
    CHECK(integral_membership_oracle(poly(R, "x^2"), I, 1).is_in());
    // y is outside (x)-bar; the oracle can only say unknown
    CHECK(integral_membership_oracle(poly(R, "y"), ideal_of(R, {"x"}), 8).is_unknown());
    CHECK_THROWS_AS(integral_membership_oracle(poly(R, "x + y"), I, 4), domain_error);

    SUBCASE("randomized two-route agreement") {
        std::mt19937 rng(9157);
        auto R3 = make_poly_ring(0, {"x", "y", "z"});
        int checked = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const RingPtr& ring = trial % 2 ? R3 : R;
            std::size_t n = ring->nvars();
            std::uniform_int_distribution<std::uint32_t> exp_d(0, 4);
            std::uniform_int_distribution<std::size_t> gen_d(2, 4);
            std::vector<Polynomial> gens;
            for (std::size_t g = gen_d(rng); g > 0; --g) {
                std::vector<std::uint32_t> e(n);
                bool zero = true;
                for (auto& v : e) zero &= (v = exp_d(rng)) == 0;
                if (zero) e[0] = 1;
                gens.push_back(Polynomial::term(ring, Monomial(e), Rational(1)));
            }
            Ideal J(ring, gens);
            std::vector<std::uint32_t> fe(n);
            for (auto& v : fe) v = exp_d(rng);
            Polynomial f = Polynomial::term(ring, Monomial(fe), Rational(1));

            bool newton = NewtonPolyhedron::of(J).member(fe);
            Verdict oracle = integral_membership_oracle(f, J, 8);
            if (newton) {
                CHECK(oracle.is_in());
            } else {
                CHECK(!oracle.is_in());
            }
            ++checked;
        }
        CHECK(checked == 60);
    }
}

TEST_CASE("basically full closure") {
    auto R = quot(2, {"x", "y"}, {"x^2", "x*y"});
    Ideal m = ideal_of(R, {"x", "y"});
    auto bf = basically_full_closure(m);
    CHECK(bf.name() == "bf");
    // (m y : m) picks up x: x m = (x^2, xy) = 0 inside (y^2) m
    CHECK(bf.closure(ideal_of(R, {"y"})) == m);
    CHECK(bf.membership(ideal_of(R, {"y"}), poly(R, "x")).is_in());

    auto S = quot(2, {"x", "y", "z"}, {"x^2", "x*y", "z^2"});
    Ideal n = ideal_of(S, {"x", "y", "z"});
    auto bfS = basically_full_closure(n);
    // here x z kills only y^2, yz: (n y : n) = (y, xz) and x stays outside
    CHECK(bfS.closure(ideal_of(S, {"y"})) == ideal_of(S, {"y", "x*z"}));
    CHECK(bfS.membership(ideal_of(S, {"y"}), poly(S, "x")).is_out());

    CHECK_THROWS_AS(basically_full_closure(Ideal::unit(R)), domain_error);

    SUBCASE("agrees with the module construction on a whole lattice") {
        auto T = quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"});
        auto F = FiniteRing::build(T);
        Ideal mt = F.to_ideal(F.maximal_ideal());
        auto direct = basically_full_closure(mt);
        auto via_module = construct_from_module(mt);
        for (const auto& s : enumerate_ideals(F).ideals) {
            Ideal I = F.to_ideal(s);
            CHECK(direct.closure(I) == via_module.closure(I));
        }
    }
}

TEST_CASE("delta closure") {
    auto R = make_poly_ring(0, {"x", "y"});

    SUBCASE("system {R} is the identity") {
        auto d = delta_closure({Ideal::unit(R)});
        CHECK(d.name() == "delta[(1)]");
        Ideal I = ideal_of(R, {"x^2*y"});
        CHECK(d.closure(I) == I);
    }

    SUBCASE("principal system in a domain stays put") {
        auto d = delta_closure({ideal_of(R, {"x"})});
        CHECK(d.name() == "delta[(x)]");
        // (xy x^L : x^L) = (xy) at every stage: x cancels in a domain
        Budget b;
        b.word_max = 3;
        CHECK(d.closure(ideal_of(R, {"x*y"}), b) == ideal_of(R, {"x*y"}));
        CHECK(d.membership(ideal_of(R, {"x*y"}), poly(R, "x*y")).is_in());
        // truncation cannot certify exclusion
        CHECK(d.membership(ideal_of(R, {"x*y"}), poly(R, "y")).is_unknown());
    }

    SUBCASE("nilpotent words are skipped, finite and general routes agree") {
        auto T = quot(2, {"x", "y"}, {"x^2", "x*y", "y^2"});
        auto F = FiniteRing::build(T);
        Ideal m = ideal_of(T, {"x", "y"});
        auto dF = delta_closure({m}, F);
        auto dG = delta_closure({m});
        // the only nonzero word is m itself (m^2 = 0), and
        // ((x) m : m) = (0 : m) = m
        CHECK(dF.closure(ideal_of(T, {"x"})) == m);
        for (const auto& s : enumerate_ideals(F).ideals) {
            Ideal I = F.to_ideal(s);
            CHECK(dF.closure(I) == dG.closure(I));
        }
        CHECK(semiprime_check(dF, {Ideal::zero(T), ideal_of(T, {"x"}), m}).all_passed());
    }
}

TEST_CASE("v-operation on a finite ring") {
    auto R = quot(2, {"X", "Y"}, {"X^2", "X*Y", "Y^2"});
    auto F = FiniteRing::build(R);
    auto v = v_operation(F);
    CHECK(v.name() == "vop");
    CHECK(!v.claims_semi_prime());

    Ideal m = ideal_of(R, {"X", "Y"});
    // no proper principal ideal contains the two-dimensional m, so m_v = R,
    // while (0) and each line (r) are intersections of principal ideals
    CHECK(v.closure(m) == Ideal::unit(R));
    CHECK(v.closure(Ideal::zero(R)) == Ideal::zero(R));
    CHECK(v.closure(ideal_of(R, {"X"})) == ideal_of(R, {"X"}));
    CHECK(v.closure(ideal_of(R, {"X + Y"})) == ideal_of(R, {"X + Y"}));

    auto lattice = enumerate_ideals(F);
    std::vector<Ideal> fam;
    for (const auto& s : lattice.ideals) fam.push_back(F.to_ideal(s));
    CHECK(check_axioms(v, fam).all_passed());

    // m * m_v = m escapes (m^2)_v = (0): the star/semi-prime failure
    auto sp = semiprime_check(v, std::vector<std::pair<Ideal, Ideal>>{{m, m}});
    CHECK(sp.has_failure());

    std::size_t closed = 0;
    for (const auto& I : fam)
        if (v.closure(I) == I) ++closed;
    CHECK(closed == 5);  // 0, the three lines, R; only m moves
}

TEST_CASE("monomial primary decomposition") {
    auto R = make_poly_ring(0, {"x", "y"});
    auto comps = monomial_primary_decomposition(ideal_of(R, {"x^2", "x*y"}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == ideal_of(R, {"x"}));
    CHECK(comps[1] == ideal_of(R, {"x^2", "y"}));

    auto R3 = make_poly_ring(0, {"x", "y", "z"});
    auto comps3 = monomial_primary_decomposition(ideal_of(R3, {"x*y", "x*z"}));
    REQUIRE(comps3.size() == 2);
    CHECK(comps3[0] == ideal_of(R3, {"x"}));
    CHECK(comps3[1] == ideal_of(R3, {"y", "z"}));

    // primes decompose as themselves
    auto prime = monomial_primary_decomposition(ideal_of(R3, {"y", "z"}));
    REQUIRE(prime.size() == 1);
    CHECK(prime[0] == ideal_of(R3, {"y", "z"}));

    CHECK_THROWS_AS(monomial_primary_decomposition(Ideal::unit(R)), domain_error);
    CHECK(monomial_primary_decomposition(Ideal::zero(R)).size() == 1);

    SUBCASE("unmixed part keeps minimal codimension") {
        CHECK(unmixed_part(ideal_of(R, {"x^2", "x*y"})) == ideal_of(R, {"x"}));
        CHECK(unmixed_part(ideal_of(R3, {"y", "z"})) == ideal_of(R3, {"y", "z"}));
        // m-primary: a single component, so the ideal is its own unmixed part
        CHECK(unmixed_part(ideal_of(R, {"x^2", "x*y", "y^2"})) ==
              ideal_of(R, {"x^2", "x*y", "y^2"}));
    }
}

TEST_CASE("preclosure certificates re-verify") {
    SUBCASE("colon misses idempotence") {
        auto pc = colon_preclosure();
        CHECK(pc.op.name() == "colon((x))");
        CHECK(pc.fails_axiom == "idempotence");
        auto rep = verify_preclosure(pc);
        const CheckRecord* summary = rep.find("preclosure/certificate");
        REQUIRE(summary != nullptr);
        CHECK(summary->status == "pass");
        CHECK(rep.find("axioms/idempotence")->status == "fail");
        CHECK(rep.find("axioms/extension")->status == "pass");
    }

    SUBCASE("unmixed part misses order-preservation") {
        auto pc = unmixed_preclosure();
        CHECK(pc.fails_axiom == "order-preservation");
        auto rep = verify_preclosure(pc);
        CHECK(rep.find("preclosure/certificate")->status == "pass");
        CHECK(rep.find("axioms/order-preservation")->status == "fail");
        CHECK(rep.find("axioms/idempotence")->status == "pass");
    }

    SUBCASE("ratliff-rush stage one catches x^2 y^2") {
        auto R = make_poly_ring(0, {"x", "y"});
        Ideal I = ideal_of(R, {"x^4", "x^3*y", "x*y^3", "y^4"});
        // x^2 y^2 * I lands in I^2 by four monomial divisions
        CHECK(ratliff_rush_bounded(I, 1).contains(poly(R, "x^2*y^2")));
        CHECK(!I.contains(poly(R, "x^2*y^2")));
        CHECK_THROWS_AS(ratliff_rush_bounded(Ideal::zero(R), 2), domain_error);
    }

    SUBCASE("ratliff-rush search finds an order-preservation witness") {
        auto w = ratliff_rush_order_witness();
        REQUIRE(w.has_value());
        // (x^4, x^3 y, x y^3, y^4) sits inside (x^3, y^3), but its stage
        // union picks up x^2 y^2, which (x^3, y^3) never absorbs
        CHECK(w->second.contains(w->first));
        Ideal small = ratliff_rush_bounded(w->first, 8);
        Ideal large = ratliff_rush_bounded(w->second, 8);
        CHECK(!large.contains(small));

        auto pc = ratliff_rush_preclosure();
        CHECK(pc.certificate.size() == 2);
        auto rep = verify_preclosure(pc);
        CHECK(rep.find("preclosure/certificate")->status == "pass");
        CHECK(rep.find("axioms/order-preservation")->status == "fail");
        CHECK(rep.find("axioms/extension")->status == "pass");
        CHECK(rep.find("axioms/idempotence")->status == "pass");
    }

    SUBCASE("the suite carries all three") {
        auto suite = preclosure_suite();
        REQUIRE(suite.size() == 3);
        CHECK(suite[0].fails_axiom == "idempotence");
        CHECK(suite[1].fails_axiom == "order-preservation");
        CHECK(suite[2].fails_axiom == "order-preservation");
        for (const auto& pc : suite) {
            auto rep = verify_preclosure(pc);
            CHECK(rep.find("preclosure/certificate")->status == "pass");
        }
    }
}
