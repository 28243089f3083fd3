#include "idealclose/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace idealclose {

namespace {

std::uint64_t g_gb_step_limit = 50'000'000;

}  // namespace

std::uint64_t gb_step_limit() { return g_gb_step_limit; }
void set_gb_step_limit(std::uint64_t steps) { g_gb_step_limit = steps; }

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

namespace {

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm_lm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& l,
                        std::uint32_t p) {
    Monomial mf = l.divide_by(f.leading_monomial());
    Monomial mg = l.divide_by(g.leading_monomial());
    Polynomial a = f.times_term(cf_inv(f.leading_term().coeff, p), mf);
    Polynomial b = g.times_term(cf_inv(g.leading_term().coeff, p), mg);
    return a - b;
}

}  // namespace

std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens) {
    if (ring->is_quotient()) throw domain_error("buchberger expects a polynomial ring");
    const std::uint32_t p = ring->characteristic;
    const MonomialOrder ord = ring->order;
    std::uint64_t steps = 0;
    const std::uint64_t limit = g_gb_step_limit;

    std::vector<Polynomial> basis;
    for (auto& f : gens) {
        Polynomial g = retag(f, ring);
        if (g.is_zero()) continue;
        if (g.leading_monomial().is_one()) return {Polynomial::one(ring)};
        basis.push_back(g.monic());
    }
    if (basis.empty()) return {};

    // monomial inputs already form a Groebner basis (every S-polynomial
    // cancels exactly); the reduced basis is the divisibility-minimal set
    if (std::all_of(basis.begin(), basis.end(),
                    [](const Polynomial& f) { return f.terms().size() == 1; })) {
        std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
            return compare(a.leading_monomial(), b.leading_monomial(), ord) < 0;
        });
        std::vector<Polynomial> minimal;
        for (const auto& f : basis) {
            bool redundant = false;
            for (const auto& h : minimal)
                if (h.leading_monomial().divides(f.leading_monomial())) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(f);
        }
        std::reverse(minimal.begin(), minimal.end());
        return minimal;
    }

    // unordered index pairs whose S-polynomial has been accounted for
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };

    std::vector<CriticalPair> pending;
    auto add_pairs_with = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i)
            pending.push_back(
                {i, t, lcm(basis[i].leading_monomial(), basis[t].leading_monomial())});
    };
    for (std::size_t t = 1; t < basis.size(); ++t) add_pairs_with(t);

    while (!pending.empty()) {
        // normal selection: smallest lcm in the ring order, ties by index
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            int c = compare(pending[k].lcm_lm, pending[best].lcm_lm, ord);
            if (c < 0 ||
                (c == 0 && std::make_pair(pending[k].i, pending[k].j) <
                               std::make_pair(pending[best].i, pending[best].j)))
                best = k;
        }
        CriticalPair pr = pending[best];
        pending.erase(pending.begin() + best);

        const Monomial& lmi = basis[pr.i].leading_monomial();
        const Monomial& lmj = basis[pr.j].leading_monomial();

        // coprime leading monomials: the S-polynomial reduces to zero
        if (coprime(lmi, lmj)) {
            done.insert(key(pr.i, pr.j));
            continue;
        }
        // chain criterion: lm_k divides the lcm and both flanking pairs are
        // already accounted for (strictly earlier, so no cyclic exemptions)
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (basis[k].leading_monomial().divides(pr.lcm_lm) && done.count(key(pr.i, k)) &&
                done.count(key(pr.j, k)))
                skip = true;
        }
        if (skip) {
            done.insert(key(pr.i, pr.j));
            continue;
        }

        Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], pr.lcm_lm, p);
        Polynomial r = normal_form(s, basis, &steps, limit);
        done.insert(key(pr.i, pr.j));
        if (r.is_zero()) continue;
        if (r.leading_monomial().is_one()) return {Polynomial::one(ring)};
        basis.push_back(r.monic());
        add_pairs_with(basis.size() - 1);
        if (basis.size() > 4096)
            throw resource_error("Groebner basis grew past the element guardrail");
    }

    // minimalize: keep only elements whose lm no kept element divides
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), ord) < 0;
    });
    std::vector<Polynomial> minimal;
    for (const auto& f : basis) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (h.leading_monomial().divides(f.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(f);
    }

    // inter-reduce tails until stable; leading monomials are untouched since
    // they are pairwise indivisible
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            Polynomial r = normal_form(minimal[i], others, &steps, limit).monic();
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), ord) > 0;
    });
    return minimal;
}

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (!same_ring(a, b))
        throw ring_mismatch_error(std::string(what) + " requires operands in the same ring");
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    if (!ring_) throw domain_error("ideal needs a ring");
    for (auto& f : gens) {
        Polynomial g = retag(f, ring_);
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
    auto r = ring;
    return Ideal(std::move(ring), {Polynomial::one(r)});
}

const std::vector<Polynomial>& Ideal::reduced_groebner_basis() const {
    if (gb_) return *gb_;
    RingPtr amb = ambient_ring(ring_);
    std::vector<Polynomial> lifted;
    lifted.reserve(gens_.size() + ring_->quotient.size());
    for (const auto& g : gens_) lifted.push_back(retag(g, amb));
    for (const auto& q : ring_->quotient) lifted.push_back(q);
    gb_ = std::make_shared<const std::vector<Polynomial>>(buchberger(amb, std::move(lifted)));
    return *gb_;
}

std::vector<Polynomial> Ideal::canonical_gens() const {
    const auto& gb = reduced_groebner_basis();
    if (!ring_->is_quotient()) return gb;
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        Polynomial nf = retag(g, ring_);
        if (nf.is_zero()) continue;
        bool dup = false;
        for (const auto& h : out)
            if (h == nf) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(nf));
    }
    return out;
}

bool Ideal::contains(const Polynomial& f) const {
    Polynomial lift = retag(f, ambient_ring(ring_));
    return normal_form(lift, reduced_groebner_basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
    require_same_ring(ring_, other.ring_, "containment");
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::operator==(const Ideal& o) const {
    require_same_ring(ring_, o.ring_, "ideal equality");
    const auto& a = reduced_groebner_basis();
    const auto& b = o.reduced_groebner_basis();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool Ideal::is_zero() const {
    if (!ring_->is_quotient()) return reduced_groebner_basis().empty();
    // zero in the quotient: every basis element reduces into the relations
    return canonical_gens().empty();
}

bool Ideal::is_unit() const {
    const auto& gb = reduced_groebner_basis();
    return gb.size() == 1 && gb.front().leading_monomial().is_one();
}

bool Ideal::is_monomial() const {
    for (const auto& g : reduced_groebner_basis())
        if (g.terms().size() != 1) return false;
    return true;
}

std::string Ideal::to_string() const {
    auto gens = canonical_gens();
    if (gens.empty()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << gens[i].to_string();
    }
    os << ")";
    return os.str();
}

Ideal ideal_from_strings(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    ps.reserve(gens.size());
    for (const auto& s : gens) ps.push_back(parse_polynomial(ring, s));
    return Ideal(ring, std::move(ps));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal product");
    // multiply canonical generating sets so iterated products (powers) stay
    // bounded by the minimal generator counts instead of compounding raw lists
    const std::vector<Polynomial> fa = a.canonical_gens();
    const std::vector<Polynomial> fb = b.canonical_gens();
    std::vector<Polynomial> gens;
    gens.reserve(fa.size() * fb.size());
    for (const auto& f : fa)
        for (const auto& g : fb) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, std::uint32_t n) {
    if (n > 64) throw resource_error("ideal power exponent guardrail");
    Ideal acc = Ideal::unit(a.ring());
    for (std::uint32_t i = 0; i < n; ++i) acc = ideal_product(acc, a);
    return acc;
}

Ideal ideal_scale(const Polynomial& x, const Ideal& j) {
    std::vector<Polynomial> gens;
    gens.reserve(j.gens().size());
    Polynomial xr = retag(x, j.ring());
    for (const auto& g : j.gens()) gens.push_back(xr * g);
    return Ideal(j.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// elimination plumbing
// ---------------------------------------------------------------------------

namespace {

/// Ambient ring with one fresh variable "@t" in front and a block order that
/// eliminates it.
RingPtr eliminator_ring(const RingPtr& amb, bool elimination_order) {
    std::vector<std::string> vars;
    vars.reserve(amb->nvars() + 1);
    vars.push_back("@t");
    vars.insert(vars.end(), amb->vars.begin(), amb->vars.end());
    return make_poly_ring(amb->characteristic, std::move(vars),
                          elimination_order ? MonomialOrder::block_order(1)
                                            : MonomialOrder::grevlex_order());
}

Polynomial lift_front(const Polynomial& f, const RingPtr& ext) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m(ext->nvars());
        std::copy(t.mono.exps.begin(), t.mono.exps.end(), m.exps.begin() + 1);
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(terms));
}

bool involves_front(const Polynomial& f) {
    for (const auto& t : f.terms())
        if (t.mono.exps[0] != 0) return true;
    return false;
}

Polynomial drop_front(const Polynomial& f, const RingPtr& amb) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m(std::vector<std::uint32_t>(t.mono.exps.begin() + 1, t.mono.exps.end()));
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(amb, std::move(terms));
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal intersection");
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());

    // monomial shortcut: x^u lies in both iff some lcm of generators
    // divides it, so the pairwise lcms generate the intersection
    if (a.is_monomial() && b.is_monomial()) {
        std::vector<Polynomial> gens;
        for (const auto& f : a.reduced_groebner_basis())
            for (const auto& g : b.reduced_groebner_basis())
                gens.push_back(Polynomial::term(
                    a.ring(), lcm(f.leading_monomial(), g.leading_monomial()), Rational(1)));
        return Ideal(a.ring(), std::move(gens));
    }

    RingPtr amb = ambient_ring(a.ring());
    RingPtr ext = eliminator_ring(amb, true);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial omt = Polynomial::one(ext) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : a.reduced_groebner_basis()) gens.push_back(t * lift_front(f, ext));
    for (const auto& g : b.reduced_groebner_basis()) gens.push_back(omt * lift_front(g, ext));

    std::vector<Polynomial> out;
    for (const auto& h : buchberger(ext, std::move(gens)))
        if (!involves_front(h)) out.push_back(drop_front(h, amb));
    return Ideal(a.ring(), std::move(out));
}

namespace {

/// Exact quotient h / f in a polynomial ring; h must lie in (f).
Polynomial exact_quotient(const Polynomial& h, const Polynomial& f) {
    const RingPtr& ring = h.ring();
    const std::uint32_t p = ring->characteristic;
    Polynomial q = Polynomial::zero(ring);
    Polynomial r = h;
    while (!r.is_zero()) {
        const auto& lt = r.leading_term();
        if (!f.leading_monomial().divides(lt.mono))
            throw domain_error("exact_quotient: dividend is not a multiple of the divisor");
        Rational c = cf_div(lt.coeff, f.leading_term().coeff, p);
        Monomial m = lt.mono.divide_by(f.leading_monomial());
        q = q + Polynomial::term(ring, m, c);
        r = r - f.times_term(c, m);
    }
    return q;
}

/// (a : f) for a single nonzero element, through the lift to the ambient
/// polynomial ring: generators of lift(a) meet (f) are all divisible by f,
/// and their exact quotients generate the colon.
Ideal colon_by_element(const Ideal& a, const Polynomial& f) {
    RingPtr amb = ambient_ring(a.ring());
    Polynomial lifted_f = retag(f, amb);
    Ideal lift_a(amb, a.reduced_groebner_basis());
    Ideal meet = ideal_intersection(lift_a, Ideal(amb, {lifted_f}));
    std::vector<Polynomial> quots;
    for (const auto& h : meet.reduced_groebner_basis())
        quots.push_back(exact_quotient(h, lifted_f));
    return Ideal(a.ring(), std::move(quots));
}

}  // namespace

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal colon");
    std::vector<Polynomial> bgens = b.canonical_gens();
    Ideal result;
    bool first = true;
    for (const auto& f : bgens) {
        if (f.is_zero()) continue;
        Ideal part = colon_by_element(a, f);
        result = first ? part : ideal_intersection(result, part);
        first = false;
    }
    if (first) return Ideal::unit(a.ring());  // (a : (0)) is everything
    return result;
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal saturation");
    Ideal prev = a;
    for (int iter = 0; iter < 256; ++iter) {
        Ideal next = ideal_colon(prev, b);
        if (next == prev) return next;
        prev = std::move(next);
    }
    throw resource_error("saturation chain did not stabilize within the guardrail");
}

Ideal bracket_power(const Ideal& a, std::uint32_t e) {
    if (a.ring()->characteristic == 0)
        throw domain_error("bracket powers need positive characteristic");
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size());
    for (const auto& g : a.gens()) gens.push_back(g.frobenius_power(e));
    return Ideal(a.ring(), std::move(gens));
}

bool radical_membership(const Polynomial& f, const Ideal& a) {
    Polynomial lifted = retag(f, ambient_ring(a.ring()));
    if (lifted.is_zero()) return true;
    if (a.is_unit()) return true;
    RingPtr amb = ambient_ring(a.ring());
    RingPtr ext = eliminator_ring(amb, false);
    Polynomial t = Polynomial::variable(ext, 0);
    std::vector<Polynomial> gens;
    for (const auto& g : a.reduced_groebner_basis()) gens.push_back(lift_front(g, ext));
    gens.push_back(Polynomial::one(ext) - t * lift_front(lifted, ext));
    auto gb = buchberger(ext, std::move(gens));
    return gb.size() == 1 && gb.front().leading_monomial().is_one();
}

std::vector<Monomial> minimal_monomial_generators(const Ideal& a) {
    if (a.ring()->is_quotient())
        throw domain_error("minimal monomial generators live in polynomial rings");
    if (!a.is_monomial()) throw domain_error("not a monomial ideal");
    std::vector<Monomial> out;
    for (const auto& g : a.reduced_groebner_basis()) out.push_back(g.leading_monomial());
    return out;
}

// ---------------------------------------------------------------------------
// quotient rings and maps
// ---------------------------------------------------------------------------

RingPtr make_quotient_ring(const RingPtr& base, const std::vector<Polynomial>& gens) {
    RingPtr amb = ambient_ring(base);
    std::vector<Polynomial> defining;
    if (base->is_quotient()) defining = base->quotient;
    for (const auto& g : gens) {
        Polynomial lift = retag(g, amb);
        if (!lift.is_zero()) defining.push_back(std::move(lift));
    }
    auto gb = buchberger(amb, std::move(defining));
    if (gb.empty()) return amb;
    if (gb.size() == 1 && gb.front().leading_monomial().is_one())
        throw domain_error("quotient by the unit ideal is the zero ring");
    auto r = std::make_shared<RingDescriptor>();
    r->characteristic = amb->characteristic;
    r->vars = amb->vars;
    r->order = amb->order;
    r->quotient = std::move(gb);
    r->ambient = amb;
    return r;
}

RingPtr make_quotient_ring(const RingPtr& base, const std::vector<std::string>& gens) {
    RingPtr amb = ambient_ring(base);
    std::vector<Polynomial> ps;
    ps.reserve(gens.size());
    for (const auto& s : gens) ps.push_back(parse_polynomial(amb, s));
    return make_quotient_ring(base, ps);
}

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_->characteristic != target_->characteristic)
        throw domain_error("ring maps must preserve the characteristic");
    if (images.size() != source_->nvars())
        throw domain_error("a ring map needs one image per source variable");
    images_.reserve(images.size());
    for (auto& f : images) images_.push_back(retag(f, target_));
    for (const auto& q : source_->quotient) {
        if (!apply(q).is_zero())
            throw domain_error("map does not kill the source relation " + q.to_string());
    }
}

Polynomial RingMap::apply(const Polynomial& f) const {
    Polynomial acc = Polynomial::zero(target_);
    for (const auto& t : f.terms()) {
        Polynomial val = Polynomial::constant(target_, t.coeff);
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            if (t.mono.exps[i] > 0) val = val * images_[i].pow(t.mono.exps[i]);
        acc = acc + val;
    }
    return acc;
}

Ideal RingMap::extend(const Ideal& i) const {
    if (!same_ring(i.ring(), source_))
        throw ring_mismatch_error("extend expects an ideal of the map's source");
    std::vector<Polynomial> gens;
    for (const auto& g : i.canonical_gens()) gens.push_back(apply(g));
    return Ideal(target_, std::move(gens));
}

bool RingMap::is_quotient_surjection() const {
    if (source_->vars != target_->vars) return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != Polynomial::variable(target_, i)) return false;
    return true;
}

Ideal RingMap::contract(const Ideal& j) const {
    if (!same_ring(j.ring(), target_))
        throw ring_mismatch_error("contract expects an ideal of the map's target");
    if (!is_quotient_surjection())
        throw domain_error("contraction preimages need an identity-on-variables surjection");
    // the lifted basis of j already includes the target's defining ideal,
    // i.e. the kernel generators of the surjection
    std::vector<Polynomial> gens;
    for (const auto& g : j.reduced_groebner_basis()) gens.push_back(g);
    return Ideal(source_, std::move(gens));
}

std::string RingMap::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ", ";
        os << source_->vars[i] << " -> " << images_[i].to_string();
    }
    os << "]";
    return os.str();
}

}  // namespace idealclose
