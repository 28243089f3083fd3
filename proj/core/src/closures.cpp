#include "idealclose/closures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace idealclose {

namespace {

void require_positive_char(const RingPtr& R, const char* who) {
    if (R->characteristic == 0)
        throw domain_error(std::string(who) + ": needs positive characteristic");
}

void require_monomial_free(const Ideal& I, const char* who) {
    if (I.ring()->is_quotient())
        throw domain_error(std::string(who) + ": needs a free polynomial ring");
    if (!I.is_monomial())
        throw domain_error(std::string(who) + ": monomial ideals only");
}

void require_lab_ring(const FiniteRing& F, const Ideal& I, const char* who) {
    if (!same_ring(F.ring(), I.ring()))
        throw ring_mismatch_error(std::string(who) + ": ideal from a different ring");
}

Ideal ideal_from_monomials(const RingPtr& R, const std::vector<Monomial>& monos) {
    std::vector<Polynomial> gens;
    gens.reserve(monos.size());
    for (const auto& m : monos) gens.push_back(Polynomial::term(R, m, Rational(1)));
    return Ideal(R, gens);
}

}  // namespace

// ---------------------------------------------------------------------------
// Radical.

ClosureOperation radical_closure() {
    auto member = [](const Ideal& I, const Polynomial& f, const Budget&) {
        return radical_membership(f, I) ? Verdict::in() : Verdict::out();
    };
    auto close = [](const Ideal& I, const Budget&) {
        const RingPtr& R = I.ring();
        if (R->is_quotient())
            throw domain_error("radical: generators on a quotient need the finite-ring form");
        if (!I.is_monomial())
            throw domain_error("radical: generator computation is monomial-only");
        std::vector<Monomial> sq;
        for (const auto& m : minimal_monomial_generators(I)) sq.push_back(m.squarefree_part());
        return ideal_from_monomials(R, sq);
    };
    return ClosureOperation("radical", member, close, /*semi_prime=*/true);
}

ClosureOperation radical_closure(const FiniteRing& F) {
    // r is in rad(I) iff r^d lands in I, d = dim R: the nilpotency index of
    // r mod I is at most dim R/I <= d
    auto member = [F](const Ideal& I, const Polynomial& f, const Budget&) {
        require_lab_ring(F, I, "radical");
        Subspace s = F.to_subspace(I);
        FpVec r = F.pow(F.vec(f), F.dim());
        return s.contains(r) ? Verdict::in() : Verdict::out();
    };
    auto close = [F](const Ideal& I, const Budget&) {
        require_lab_ring(F, I, "radical");
        Subspace s = F.to_subspace(I);
        std::vector<FpVec> members;
        for (std::size_t i = 0; i < F.size(); ++i) {
            FpVec r = F.element(i);
            if (s.contains(F.pow(r, F.dim()))) members.push_back(r);
        }
        return F.to_ideal(F.ideal_span(members));
    };
    return ClosureOperation("radical", member, close, true);
}

// ---------------------------------------------------------------------------
// Saturation.

ClosureOperation saturation_closure(const Ideal& a) {
    auto close = [a](const Ideal& I, const Budget&) { return ideal_saturation(I, a); };
    return ClosureOperation("sat(" + a.to_string() + ")", {}, close, true);
}

// ---------------------------------------------------------------------------
// Frobenius.

ClosureOperation frobenius_closure(std::uint32_t e_cap) {
    std::string nm = e_cap == 0 ? "frob" : "frob(" + std::to_string(e_cap) + ")";
    auto member = [e_cap](const Ideal& I, const Polynomial& f, const Budget& b) {
        const RingPtr& R = I.ring();
        require_positive_char(R, "frob");
        // free polynomial rings are regular, Frobenius is flat there, and
        // f^q in I^[q] forces f in I; that certifies out-verdicts
        if (!R->is_quotient())
            return I.contains(f) ? Verdict::in() : Verdict::out();
        if (I.contains(f)) return Verdict::in();
        std::uint32_t cap = e_cap == 0 ? b.e_max : e_cap;
        for (std::uint32_t e = 1; e <= cap; ++e) {
            if (bracket_power(I, e).contains(f.frobenius_power(e))) return Verdict::in();
        }
        return Verdict::unknown(UnknownReason::budget_exhausted);
    };
    auto close = [](const Ideal& I, const Budget&) {
        const RingPtr& R = I.ring();
        require_positive_char(R, "frob");
        if (R->is_quotient())
            throw domain_error("frob: exact closure on a quotient needs the finite-ring form");
        return I;
    };
    return ClosureOperation(nm, member, close, true);
}

namespace {

// Union of the stages {r : r^(p^e) in I^[p^e]} on a finite ring.  Each stage
// reads only the e-th power table of the ring, the table sequence is
// eventually periodic, and the stages grow monotonically, so the union is
// complete once a table repeats.
Subspace frobenius_union(const FiniteRing& F, const Subspace& s) {
    const std::uint32_t p = F.characteristic();
    std::vector<FpVec> powers;
    powers.reserve(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) powers.push_back(F.element(i));
    Subspace acc = s;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t guard = 0; guard <= 4096; ++guard) {
        std::vector<std::size_t> sig(F.size());
        for (std::size_t i = 0; i < F.size(); ++i) sig[i] = F.index_of(powers[i]);
        if (!seen.insert(std::move(sig)).second) return acc;
        std::vector<FpVec> bracket_gens;
        for (const auto& row : s.rows()) bracket_gens.push_back(powers[F.index_of(row)]);
        Subspace bracket = F.ideal_span(bracket_gens);
        std::vector<FpVec> stage;
        for (std::size_t i = 0; i < F.size(); ++i)
            if (bracket.contains(powers[i])) stage.push_back(F.element(i));
        acc = acc.sum(F.ideal_span(stage));
        for (auto& v : powers) v = F.pow(v, p);
    }
    throw resource_error("frob: power table failed to cycle");
}

}  // namespace

ClosureOperation frobenius_closure(const FiniteRing& F) {
    auto close = [F](const Ideal& I, const Budget&) {
        require_lab_ring(F, I, "frob");
        return F.to_ideal(frobenius_union(F, F.to_subspace(I)));
    };
    return ClosureOperation("frob", {}, close, true);
}

ClosureOperation frobenius_stage(std::uint32_t e) {
    std::string nm = "frobstage(" + std::to_string(e) + ")";
    auto member = [e](const Ideal& I, const Polynomial& f, const Budget&) {
        require_positive_char(I.ring(), "frobstage");
        return bracket_power(I, e).contains(f.frobenius_power(e)) ? Verdict::in()
                                                                  : Verdict::out();
    };
    auto close = [](const Ideal& I, const Budget&) {
        const RingPtr& R = I.ring();
        require_positive_char(R, "frobstage");
        if (R->is_quotient())
            throw domain_error("frobstage: exact closure on a quotient needs the finite-ring form");
        return I;
    };
    return ClosureOperation(nm, member, close, true);
}

ClosureOperation frobenius_stage(std::uint32_t e, const FiniteRing& F) {
    std::string nm = "frobstage(" + std::to_string(e) + ")";
    auto close = [e, F](const Ideal& I, const Budget&) {
        require_lab_ring(F, I, "frobstage");
        Subspace s = F.to_subspace(I);
        const std::uint32_t p = F.characteristic();
        std::vector<FpVec> powers;
        powers.reserve(F.size());
        for (std::size_t i = 0; i < F.size(); ++i) powers.push_back(F.element(i));
        for (std::uint32_t step = 0; step < e; ++step)
            for (auto& v : powers) v = F.pow(v, p);
        std::vector<FpVec> bracket_gens;
        for (const auto& row : s.rows()) bracket_gens.push_back(powers[F.index_of(row)]);
        Subspace bracket = F.ideal_span(bracket_gens);
        std::vector<FpVec> stage;
        for (std::size_t i = 0; i < F.size(); ++i)
            if (bracket.contains(powers[i])) stage.push_back(F.element(i));
        return F.to_ideal(F.ideal_span(stage));
    };
    return ClosureOperation(nm, {}, close, true);
}

// ---------------------------------------------------------------------------
// Integral closure of monomial ideals.

NewtonPolyhedron NewtonPolyhedron::of(const Ideal& I) {
    require_monomial_free(I, "newton");
    NewtonPolyhedron np;
    np.nvars = I.ring()->nvars();
    for (const auto& m : minimal_monomial_generators(I)) np.exponents.push_back(m.exps);
    return np;
}

bool NewtonPolyhedron::member(const std::vector<std::uint32_t>& u) const {
    if (u.size() != nvars) throw domain_error("newton: exponent length mismatch");
    if (exponents.empty()) return false;
    const std::size_t k = exponents.size();
    const std::size_t n = nvars;

    // Feasibility of sum(l_i a_i) <= u, sum(l_i) = 1, l >= 0, by phase-one
    // simplex over exact rationals.  Slacks make the inequality rows basic;
    // the convexity row carries one artificial variable, and the point is in
    // the polyhedron iff the artificial can be driven to zero.  Bland's rule
    // prevents cycling.
    const std::size_t cols = k + n + 2;  // lambdas, slacks, artificial, rhs
    const std::size_t art = k + n;
    const std::size_t rhs = cols - 1;
    std::vector<std::vector<Rational>> tab(n + 1, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) tab[j][i] = Rational(exponents[i][j]);
        tab[j][k + j] = 1;
        tab[j][rhs] = Rational(u[j]);
    }
    for (std::size_t i = 0; i < k; ++i) tab[n][i] = 1;
    tab[n][art] = 1;
    tab[n][rhs] = 1;

    std::vector<std::size_t> basis(n + 1);
    for (std::size_t j = 0; j < n; ++j) basis[j] = k + j;
    basis[n] = art;

    // reduced costs for "minimize artificial", priced out over the basis
    std::vector<Rational> obj(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c) obj[c] = -tab[n][c];
    obj[art] = 0;

    const std::size_t npos = cols;
    for (std::size_t iter = 0; iter < 10000; ++iter) {
        std::size_t enter = npos;
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            if (obj[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == npos) break;
        std::size_t leave = npos;
        Rational best(0);
        for (std::size_t r = 0; r <= n; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rational ratio = tab[r][rhs] / tab[r][enter];
            if (leave == npos || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == npos) break;  // phase one is bounded; defensive
        Rational piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        for (std::size_t r = 0; r <= n; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rational factor = tab[r][enter];
            for (std::size_t c = 0; c < cols; ++c) tab[r][c] -= factor * tab[leave][c];
        }
        if (obj[enter] != 0) {
            Rational factor = obj[enter];
            for (std::size_t c = 0; c < cols; ++c) obj[c] -= factor * tab[leave][c];
        }
        basis[leave] = enter;
    }
    Rational residual(0);
    for (std::size_t r = 0; r <= n; ++r)
        if (basis[r] == art) residual = tab[r][rhs];
    return residual == 0;
}

namespace {

std::vector<std::vector<std::uint32_t>> newton_box_members(const NewtonPolyhedron& np,
                                                           std::uint64_t cell_cap) {
    std::vector<std::uint32_t> box(np.nvars, 0);
    for (const auto& row : np.exponents)
        for (std::size_t j = 0; j < np.nvars; ++j) box[j] = std::max(box[j], row[j]);
    std::uint64_t cells = 1;
    for (std::uint32_t b : box) {
        cells *= b + 1;
        if (cells > cell_cap) throw resource_error("newton: enumeration box too large");
    }
    std::vector<std::vector<std::uint32_t>> members;
    std::vector<std::uint32_t> u(np.nvars, 0);
    while (true) {
        if (np.member(u)) members.push_back(u);
        std::size_t j = 0;
        while (j < np.nvars && u[j] == box[j]) u[j++] = 0;
        if (j == np.nvars) break;
        ++u[j];
    }
    return members;
}

}  // namespace

Ideal integral_closure_monomial(const Ideal& I) {
    require_monomial_free(I, "intclosure");
    if (I.is_zero()) return I;
    auto np = NewtonPolyhedron::of(I);
    // any member exceeding every generator in some coordinate stays a member
    // after dropping that coordinate, so minimal members live in the box
    auto members = newton_box_members(np, std::uint64_t(1) << 22);
    std::vector<Monomial> gens;
    for (const auto& u : members) {
        bool minimal = true;
        for (const auto& v : members) {
            if (v == u) continue;
            if (Monomial(v).divides(Monomial(u))) {
                minimal = false;
                break;
            }
        }
        if (minimal) gens.push_back(Monomial(u));
    }
    return ideal_from_monomials(I.ring(), gens);
}

ClosureOperation integral_closure_op() {
    auto member = [](const Ideal& I, const Polynomial& f, const Budget&) -> Verdict {
        if (I.ring()->is_quotient() || !I.is_monomial())
            return Verdict::unknown(UnknownReason::not_implemented);
        if (f.is_zero()) return Verdict::in();
        if (!f.is_monomial()) return Verdict::unknown(UnknownReason::not_implemented);
        auto np = NewtonPolyhedron::of(I);
        return np.member(f.leading_monomial().exps) ? Verdict::in() : Verdict::out();
    };
    auto close = [](const Ideal& I, const Budget& b) {
        require_monomial_free(I, "intclosure");
        if (I.is_zero()) return I;
        auto np = NewtonPolyhedron::of(I);
        std::uint64_t cells = 1;
        for (std::size_t j = 0; j < np.nvars; ++j) {
            std::uint32_t m = 0;
            for (const auto& row : np.exponents) m = std::max(m, row[j]);
            cells *= m + 1;
            if (cells > b.mono_max) throw resource_error("intclosure: box exceeds budget");
        }
        return integral_closure_monomial(I);
    };
    return ClosureOperation("intclosure", member, close, true);
}

Verdict integral_membership_oracle(const Polynomial& f, const Ideal& I,
                                   std::uint32_t n_max) {
    if (f.is_zero()) return Verdict::in();
    if (!f.is_monomial()) throw domain_error("integral oracle: monomial elements only");
    require_monomial_free(I, "integral oracle");
    Ideal In = I;
    Polynomial fn = f;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        if (In.contains(fn)) return Verdict::in();
        In = ideal_product(In, I);
        fn = fn * f;
    }
    return Verdict::unknown(UnknownReason::budget_exhausted);
}

// ---------------------------------------------------------------------------
// Basically full closure.

ClosureOperation basically_full_closure(const Ideal& m) {
    if (m.is_unit()) throw domain_error("bf: the designated ideal must be proper");
    auto close = [m](const Ideal& I, const Budget&) {
        std::vector<Polynomial> prods;
        for (const auto& a : I.canonical_gens())
            for (const auto& b : m.canonical_gens()) prods.push_back(a * b);
        return ideal_colon(Ideal(I.ring(), prods), m);
    };
    return ClosureOperation("bf", {}, close, true);
}

// ---------------------------------------------------------------------------
// Delta closure.

namespace {

std::string delta_name(const std::vector<Ideal>& gens) {
    std::string nm = "delta[";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) nm += ",";
        nm += gens[i].to_string();
    }
    return nm + "]";
}

// Words that multiply to the zero ideal are skipped: (I*0 : 0) = R would
// otherwise absorb everything whenever some product of the generators is
// nilpotent, and the closure is meant to stay nontrivial on such rings.
Ideal delta_bounded(const std::vector<Ideal>& gens, const Ideal& I, std::uint32_t word_max) {
    if (gens.empty()) return I;
    Ideal W = gens[0];
    for (std::size_t i = 1; i < gens.size(); ++i) W = ideal_product(W, gens[i]);
    // directedness: every nonzero word of length <= L divides W^L, so one
    // colon per length covers all words of that length
    Ideal stage = I;
    Ideal Wl = Ideal::unit(I.ring());
    for (std::uint32_t L = 1; L <= word_max; ++L) {
        Wl = ideal_product(Wl, W);
        if (Wl.is_zero()) break;
        stage = ideal_colon(ideal_product(I, Wl), Wl);
    }
    return stage;
}

}  // namespace

ClosureOperation delta_closure(std::vector<Ideal> gens) {
    auto member = [gens](const Ideal& I, const Polynomial& f, const Budget& b) {
        if (delta_bounded(gens, I, b.word_max).contains(f)) return Verdict::in();
        return Verdict::unknown(UnknownReason::budget_exhausted);
    };
    auto close = [gens](const Ideal& I, const Budget& b) {
        return delta_bounded(gens, I, b.word_max);
    };
    return ClosureOperation(delta_name(gens), member, close, true);
}

ClosureOperation delta_closure(std::vector<Ideal> gens, const FiniteRing& F) {
    std::string nm = delta_name(gens);
    auto close = [gens, F](const Ideal& I, const Budget&) {
        require_lab_ring(F, I, "delta");
        Subspace s = F.to_subspace(I);
        if (gens.empty()) return F.to_ideal(s);
        // the multiplicative closure of the generators is a finite set of
        // ideals; enumerate it and sum the nonzero-word stages
        std::set<Subspace> words;
        for (const auto& g : gens) {
            require_lab_ring(F, g, "delta");
            words.insert(F.to_subspace(g));
        }
        while (true) {
            std::set<Subspace> next = words;
            for (const auto& a : words)
                for (const auto& b : words) next.insert(F.ideal_mul(a, b));
            if (next.size() == words.size()) break;
            words.swap(next);
        }
        Subspace acc = s;
        for (const auto& K : words) {
            if (K.dim() == 0) continue;
            acc = acc.sum(F.ideal_colon(F.ideal_mul(s, K), K));
        }
        return F.to_ideal(acc);
    };
    return ClosureOperation(nm, {}, close, true);
}

// ---------------------------------------------------------------------------
// v-operation.

ClosureOperation v_operation(const FiniteRing& F) {
    // every non-zerodivisor of a finite ring is a unit (multiplication by it
    // is injective, hence surjective), so the total quotient ring is R and
    // the enclosing cyclic modules are the principal ideals above I
    auto close = [F](const Ideal& I, const Budget&) {
        require_lab_ring(F, I, "vop");
        Subspace s = F.to_subspace(I);
        Subspace acc = F.ideal_span({F.one_vec()});
        for (std::size_t i = 0; i < F.size(); ++i) {
            Subspace pr = F.ideal_span({F.element(i)});
            if (pr.contains(s)) acc = acc.intersect(pr);
        }
        return F.to_ideal(acc);
    };
    return ClosureOperation("vop", {}, close, /*semi_prime=*/false);
}

// ---------------------------------------------------------------------------
// Monomial primary decomposition.

namespace {

std::vector<Monomial> minimize_monomials(std::vector<Monomial> monos) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < monos.size(); ++j) {
            if (i == j) continue;
            if (monos[j].divides(monos[i]) && !(monos[i].divides(monos[j]) && j > i)) {
                keep = false;
                break;
            }
        }
        if (keep) out.push_back(monos[i]);
    }
    return out;
}

std::size_t support_size(const Monomial& m) {
    std::size_t c = 0;
    for (auto e : m.exps) c += e > 0;
    return c;
}

void split_components(const RingPtr& R, std::vector<Monomial> gens,
                      std::vector<std::vector<Monomial>>& out) {
    gens = minimize_monomials(std::move(gens));
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        if (support_size(gens[gi]) < 2) continue;
        // mixed generator: split off its first variable's pure power
        std::size_t j = 0;
        while (gens[gi].exps[j] == 0) ++j;
        Monomial u(std::vector<std::uint32_t>(gens[gi].nvars(), 0));
        u.exps[j] = gens[gi].exps[j];
        Monomial v = gens[gi].divide_by(u);
        std::vector<Monomial> left = gens;
        left[gi] = u;
        std::vector<Monomial> right = gens;
        right[gi] = v;
        split_components(R, std::move(left), out);
        split_components(R, std::move(right), out);
        return;
    }
    out.push_back(std::move(gens));  // all pure powers: primary
}

std::vector<std::uint32_t> component_support(const std::vector<Monomial>& gens) {
    std::vector<std::uint32_t> sup(gens.empty() ? 0 : gens[0].nvars(), 0);
    for (const auto& m : gens)
        for (std::size_t j = 0; j < m.exps.size(); ++j)
            if (m.exps[j] > 0) sup[j] = 1;
    return sup;
}

}  // namespace

std::vector<Ideal> monomial_primary_decomposition(const Ideal& I) {
    require_monomial_free(I, "primary decomposition");
    if (I.is_unit()) throw domain_error("primary decomposition: proper ideals only");
    if (I.is_zero()) return {I};
    const RingPtr& R = I.ring();
    std::vector<std::vector<Monomial>> raw;
    split_components(R, minimal_monomial_generators(I), raw);

    // components sharing a radical merge into one primary component
    std::map<std::vector<std::uint32_t>, Ideal> by_support;
    for (const auto& gens : raw) {
        auto sup = component_support(gens);
        Ideal comp = ideal_from_monomials(R, gens);
        auto it = by_support.find(sup);
        if (it == by_support.end())
            by_support.emplace(sup, comp);
        else
            it->second = ideal_intersection(it->second, comp);
    }
    std::vector<Ideal> comps;
    for (auto& entry : by_support) comps.push_back(entry.second);

    // irredundant: drop any component containing the intersection of the rest
    for (bool changed = true; changed && comps.size() > 1;) {
        changed = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            Ideal rest = Ideal::unit(R);
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (j != i) rest = ideal_intersection(rest, comps[j]);
            if (comps[i].contains(rest)) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    std::sort(comps.begin(), comps.end(), [](const Ideal& a, const Ideal& b) {
        auto sa = a.to_string();
        auto sb = b.to_string();
        auto ca = minimal_monomial_generators(a);
        auto cb = minimal_monomial_generators(b);
        auto da = component_support(ca);
        auto db = component_support(cb);
        std::size_t na = std::accumulate(da.begin(), da.end(), std::size_t{0});
        std::size_t nb = std::accumulate(db.begin(), db.end(), std::size_t{0});
        return na != nb ? na < nb : sa < sb;
    });

    Ideal check = Ideal::unit(R);
    for (const auto& c : comps) check = ideal_intersection(check, c);
    if (!(check == I))
        throw domain_error("primary decomposition: intersection check failed");
    return comps;
}

Ideal unmixed_part(const Ideal& I) {
    auto comps = monomial_primary_decomposition(I);
    std::size_t min_codim = SIZE_MAX;
    for (const auto& c : comps) {
        auto sup = component_support(minimal_monomial_generators(c));
        std::size_t codim = std::accumulate(sup.begin(), sup.end(), std::size_t{0});
        min_codim = std::min(min_codim, codim);
    }
    Ideal out = Ideal::unit(I.ring());
    for (const auto& c : comps) {
        auto sup = component_support(minimal_monomial_generators(c));
        if (std::accumulate(sup.begin(), sup.end(), std::size_t{0}) == min_codim)
            out = ideal_intersection(out, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Preclosures.

Ideal ratliff_rush_bounded(const Ideal& I, std::uint32_t n_max) {
    if (I.ring()->is_quotient() || !I.is_monomial())
        throw domain_error("ratliff-rush: monomial ideals of a free polynomial ring only");
    if (I.is_zero())
        throw domain_error("ratliff-rush: needs a regular ideal");
    // the stages (I^(n+1) : I^n) grow with n, so the bounded union is the
    // last stage
    Ideal In = I;
    Ideal In1 = ideal_product(I, I);
    for (std::uint32_t n = 1; n < n_max; ++n) {
        In = In1;
        In1 = ideal_product(In1, I);
    }
    return ideal_colon(In1, In);
}

CheckReport verify_preclosure(const Preclosure& pc, const Budget& b) {
    CheckReport rep;
    CheckRecord summary;
    summary.check = "preclosure/certificate";
    summary.closure = pc.op.name();
    if (pc.certificate.empty()) {
        summary.ring = "";
        summary.status = "unknown";
        summary.extra.emplace_back("note", "no stored certificate");
        summary.extra.emplace_back("expected-failure", pc.fails_axiom);
        rep.add(std::move(summary));
        return rep;
    }
    summary.ring = pc.certificate.front().ring()->describe();
    CheckReport ax = check_axioms(pc.op, pc.certificate, b);
    rep.merge(ax);
    bool ok = true;
    for (const char* axiom : {"extension", "idempotence", "order-preservation"}) {
        const CheckRecord* r = ax.find(std::string("axioms/") + axiom);
        if (!r) {
            ok = false;
            continue;
        }
        ok = ok && r->status == (pc.fails_axiom == axiom ? "fail" : "pass");
    }
    summary.status = ok ? "pass" : "fail";
    summary.extra.emplace_back("expected-failure", pc.fails_axiom);
    rep.add(std::move(summary));
    return rep;
}

Preclosure colon_preclosure() {
    RingPtr base = make_poly_ring(2, {"x"});
    RingPtr R = make_quotient_ring(base, std::vector<std::string>{"x^3"});
    Polynomial x = Polynomial::variable(R, 0);
    Ideal xi(R, {x});
    auto close = [xi](const Ideal& I, const Budget&) { return ideal_colon(I, xi); };
    ClosureOperation op("colon(" + xi.to_string() + ")", {}, close, false);
    // ((x^2 : x) : x) = (x : x) = R strictly exceeds (x^2 : x) = (x)
    std::vector<Ideal> cert = {ideal_from_strings(R, {"x^2"})};
    return Preclosure{std::move(op), "idempotence", std::move(cert)};
}

Preclosure unmixed_preclosure() {
    RingPtr R = make_poly_ring(0, {"x", "y"});
    auto close = [](const Ideal& I, const Budget&) { return unmixed_part(I); };
    ClosureOperation op("unmixed", {}, close, false);
    // (x^2, xy) has unmixed part (x), which escapes the larger (x^2, xy, y^2)
    std::vector<Ideal> cert = {ideal_from_strings(R, {"x^2", "x*y"}),
                               ideal_from_strings(R, {"x^2", "x*y", "y^2"})};
    return Preclosure{std::move(op), "order-preservation", std::move(cert)};
}

std::optional<std::pair<Ideal, Ideal>> ratliff_rush_order_witness(const Budget& b) {
    RingPtr R = make_poly_ring(0, {"x", "y"});
    // fixed catalog of small monomial ideals, scanned in order
    std::vector<std::vector<std::string>> pool = {
        {"x^4", "x^3*y", "x*y^3", "y^4"},
        {"x^4", "y^4"},
        {"x^3", "y^3"},
        {"x^3", "x*y^2", "y^3"},
        {"x^2", "y^2"},
        {"x^2", "x*y", "y^2"},
        {"x^3", "x^2*y", "y^2"},
        {"x^4", "x^2*y", "y^3"},
        {"x^5", "x^4*y", "x*y^4", "y^5"},
        {"x^5", "y^5"},
        {"x^4", "x^3*y", "x*y^3", "y^4", "x^2*y^2"},
        {"x^3", "x^2*y^2", "y^3"},
    };
    std::vector<Ideal> cat;
    cat.reserve(pool.size());
    for (const auto& gens : pool) cat.push_back(ideal_from_strings(R, gens));
    for (std::size_t i = 0; i < cat.size(); ++i) {
        for (std::size_t j = 0; j < cat.size(); ++j) {
            if (i == j || !cat[j].contains(cat[i])) continue;
            Ideal small = ratliff_rush_bounded(cat[i], b.n_max);
            Ideal large = ratliff_rush_bounded(cat[j], b.n_max);
            if (!large.contains(small)) return std::make_pair(cat[i], cat[j]);
        }
    }
    return std::nullopt;
}

Preclosure ratliff_rush_preclosure(const Budget& b) {
    auto close = [](const Ideal& I, const Budget& bb) {
        return ratliff_rush_bounded(I, bb.n_max);
    };
    ClosureOperation op("ratliff-rush", {}, close, false);
    std::vector<Ideal> cert;
    if (auto w = ratliff_rush_order_witness(b)) {
        cert.push_back(w->first);
        cert.push_back(w->second);
    }
    return Preclosure{std::move(op), "order-preservation", std::move(cert)};
}

std::vector<Preclosure> preclosure_suite(const Budget& b) {
    std::vector<Preclosure> out;
    out.push_back(colon_preclosure());
    out.push_back(unmixed_preclosure());
    out.push_back(ratliff_rush_preclosure(b));
    return out;
}

}  // namespace idealclose
