#include "idealclose/finite_ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace idealclose {

namespace {

std::uint32_t norm_mod(std::uint64_t v, std::uint32_t p) {
    return static_cast<std::uint32_t>(v % p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::uint32_t p, std::size_t ambient) {
    Subspace s;
    s.p_ = p;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient,
                        const std::vector<FpVec>& vecs) {
    Subspace s;
    s.p_ = p;
    s.ambient_ = ambient;
    for (const FpVec& v : vecs) {
        if (v.size() != ambient)
            throw domain_error("subspace: vector has wrong length");
        s.rows_.push_back(v);
    }
    s.reduce_();
    return s;
}

// Gauss-Jordan over F_p; afterwards rows are sorted by pivot column, pivots
// are 1 and are the only nonzero entries in their columns.
void Subspace::reduce_() {
    std::size_t row = 0;
    for (std::size_t col = 0; col < ambient_ && row < rows_.size(); ++col) {
        std::size_t pivot = rows_.size();
        for (std::size_t r = row; r < rows_.size(); ++r) {
            if (rows_[r][col] != 0) { pivot = r; break; }
        }
        if (pivot == rows_.size()) continue;
        std::swap(rows_[row], rows_[pivot]);
        std::uint32_t inv = static_cast<std::uint32_t>(mod_inverse(rows_[row][col], p_));
        for (std::size_t c = col; c < ambient_; ++c)
            rows_[row][c] = static_cast<std::uint16_t>(norm_mod(
                static_cast<std::uint64_t>(rows_[row][c]) * inv, p_));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == row || rows_[r][col] == 0) continue;
            std::uint32_t factor = rows_[r][col];
            for (std::size_t c = 0; c < ambient_; ++c) {
                std::uint64_t sub = static_cast<std::uint64_t>(factor) * rows_[row][c] % p_;
                rows_[r][c] = static_cast<std::uint16_t>((rows_[r][c] + p_ - sub) % p_);
            }
        }
        ++row;
    }
    rows_.erase(std::remove_if(rows_.begin(), rows_.end(),
                               [](const FpVec& v) {
                                   return std::all_of(v.begin(), v.end(),
                                                      [](std::uint16_t x) { return x == 0; });
                               }),
                rows_.end());
    std::sort(rows_.begin(), rows_.end(), [](const FpVec& a, const FpVec& b) {
        std::size_t pa = 0, pb = 0;
        while (pa < a.size() && a[pa] == 0) ++pa;
        while (pb < b.size() && b[pb] == 0) ++pb;
        return pa < pb;
    });
}

bool Subspace::contains(const FpVec& v) const {
    if (v.size() != ambient_)
        throw domain_error("subspace: vector has wrong length");
    FpVec w = v;
    for (const FpVec& row : rows_) {
        std::size_t piv = 0;
        while (piv < ambient_ && row[piv] == 0) ++piv;
        if (piv == ambient_) continue;
        if (w[piv] == 0) continue;
        std::uint32_t factor = w[piv];  // row has pivot 1
        for (std::size_t c = 0; c < ambient_; ++c) {
            std::uint64_t sub = static_cast<std::uint64_t>(factor) * row[c] % p_;
            w[c] = static_cast<std::uint16_t>((w[c] + p_ - sub) % p_);
        }
    }
    return std::all_of(w.begin(), w.end(), [](std::uint16_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (const FpVec& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<FpVec> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return span(p_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
    const Subspace& small = dim() <= other.dim() ? *this : other;
    const Subspace& big = dim() <= other.dim() ? other : *this;
    std::vector<FpVec> kept;
    for (const FpVec& v : small.elements())
        if (big.contains(v)) kept.push_back(v);
    return span(p_, ambient_, kept);
}

std::vector<FpVec> Subspace::elements() const {
    std::vector<FpVec> out;
    std::size_t count = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) count *= p_;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        FpVec v(ambient_, 0);
        std::size_t rest = idx;
        for (const FpVec& row : rows_) {
            std::uint32_t c = static_cast<std::uint32_t>(rest % p_);
            rest /= p_;
            if (c == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = static_cast<std::uint16_t>(
                    (v[j] + static_cast<std::uint64_t>(c) * row[j]) % p_);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string Subspace::key() const {
    std::ostringstream os;
    os << dim() << ':';
    for (const FpVec& row : rows_) {
        for (std::uint16_t x : row) os << x << ',';
        os << '|';
    }
    return os.str();
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
}

// ---------------------------------------------------------------------------
// FiniteRing

FiniteRing FiniteRing::build(const RingPtr& ring, std::size_t dim_cap) {
    if (!ring) throw domain_error("finite ring: null ring");
    if (ring->characteristic == 0)
        throw domain_error("finite ring: characteristic 0 is never finite");
    if (!ring->is_quotient())
        throw domain_error("finite ring: " + ring->describe() +
                           " is a free polynomial ring, hence infinite");

    std::uint32_t p = ring->characteristic;
    std::size_t n = ring->nvars();
    const std::vector<Polynomial>& gb = ring->quotient;

    // Zero-dimensionality: some Groebner leading monomial must be a pure
    // power of each variable.  The minimal such powers bound the basis box.
    std::vector<std::uint32_t> bound(n, 0);
    for (const Polynomial& g : gb) {
        const Monomial& lm = g.leading_monomial();
        std::size_t nz = 0, var = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (lm.exps[j] != 0) { ++nz; var = j; }
        if (nz == 1) {
            std::uint32_t e = lm.exps[var];
            if (bound[var] == 0 || e < bound[var]) bound[var] = e;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (bound[j] == 0)
            throw domain_error("finite ring: no power of " + ring->vars[j] +
                               " lies in the defining ideal of " + ring->describe());

    if (dim_cap == 0) {
        if (p == 2) dim_cap = 8;
        else if (p == 3) dim_cap = 5;
        else {
            std::size_t sz = 1;
            while (sz * p <= 1024) { sz *= p; ++dim_cap; }
            if (dim_cap == 0) dim_cap = 1;
        }
    }

    // Standard monomials: box monomials below no leading monomial.
    FiniteRing R;
    R.ring_ = ring;
    R.p_ = p;
    Monomial cursor{std::vector<std::uint32_t>(n, 0)};
    bool done = false;
    while (!done) {
        bool standard = true;
        for (const Polynomial& g : gb)
            if (g.leading_monomial().divides(cursor)) { standard = false; break; }
        if (standard) {
            R.basis_.push_back(cursor);
            if (R.basis_.size() > dim_cap)
                throw resource_error("finite ring: basis of " + ring->describe() +
                                     " exceeds the dimension cap " + std::to_string(dim_cap));
        }
        done = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (cursor.exps[j] + 1 < bound[j]) { ++cursor.exps[j]; done = false; break; }
            cursor.exps[j] = 0;
        }
    }
    std::sort(R.basis_.begin(), R.basis_.end(),
              [&](const Monomial& a, const Monomial& b) {
                  return compare(a, b, ring->order) < 0;
              });

    std::size_t d = R.basis_.size();
    R.size_ = 1;
    for (std::size_t i = 0; i < d; ++i) R.size_ *= p;

    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[R.basis_[i].exps] = i;
    auto coords = [&](const Polynomial& f) {
        FpVec v(d, 0);
        for (const auto& t : f.terms()) {
            auto it = index.find(t.mono.exps);
            if (it == index.end())
                throw domain_error("finite ring: normal form has a non-standard monomial");
            v[it->second] = static_cast<std::uint16_t>(
                t.coeff.convert_to<std::int64_t>());
        }
        return v;
    };

    R.table_.assign(d * d, FpVec());
    for (std::size_t i = 0; i < d; ++i) {
        Polynomial bi = Polynomial::term(ring, R.basis_[i], Rational(1));
        for (std::size_t j = i; j < d; ++j) {
            Polynomial bj = Polynomial::term(ring, R.basis_[j], Rational(1));
            FpVec prod = coords(bi * bj);
            R.table_[i * d + j] = prod;
            R.table_[j * d + i] = std::move(prod);
        }
    }

    // Table sanity: associativity on all basis triples.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                FpVec ei(d, 0), ej(d, 0), ek(d, 0);
                ei[i] = 1; ej[j] = 1; ek[k] = 1;
                if (R.mul(R.mul(ei, ej), ek) != R.mul(ei, R.mul(ej, ek)))
                    throw domain_error("finite ring: multiplication table is not associative");
            }

    std::vector<FpVec> nonunits;
    for (std::size_t idx = 0; idx < R.size_; ++idx) {
        FpVec v = R.element(idx);
        if (R.inverse(v)) ++R.unit_count_;
        else nonunits.push_back(std::move(v));
    }
    Subspace nu = Subspace::span(p, d, nonunits);
    std::size_t span_size = 1;
    for (std::size_t i = 0; i < nu.dim(); ++i) span_size *= p;
    R.local_ = (span_size == nonunits.size()) && R.is_ideal(nu);
    if (R.local_) R.max_ideal_ = std::move(nu);
    return R;
}

FpVec FiniteRing::zero_vec() const { return FpVec(dim(), 0); }

FpVec FiniteRing::one_vec() const {
    FpVec v(dim(), 0);
    // basis_[0] == 1 because the order sorts the constant monomial first
    v[0] = 1;
    return v;
}

FpVec FiniteRing::element(std::size_t index) const {
    FpVec v(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        v[i] = static_cast<std::uint16_t>(index % p_);
        index /= p_;
    }
    return v;
}

std::size_t FiniteRing::index_of(const FpVec& v) const {
    std::size_t idx = 0, mult = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        idx += v[i] * mult;
        mult *= p_;
    }
    return idx;
}

FpVec FiniteRing::vec(const Polynomial& f) const {
    Polynomial g = same_ring(f.ring(), ring_) ? f : retag(f, ring_);
    FpVec v(dim(), 0);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < dim(); ++i) index[basis_[i].exps] = i;
    for (const auto& t : g.terms()) {
        auto it = index.find(t.mono.exps);
        if (it == index.end())
            throw domain_error("finite ring: polynomial is not in normal form");
        v[it->second] = static_cast<std::uint16_t>(t.coeff.convert_to<std::int64_t>());
    }
    return v;
}

Polynomial FiniteRing::poly(const FpVec& v) const {
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < dim(); ++i)
        if (v[i] != 0) terms.push_back({basis_[i], Rational(v[i])});
    return Polynomial::from_terms(ring_, std::move(terms));
}

FpVec FiniteRing::add(const FpVec& a, const FpVec& b) const {
    FpVec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = static_cast<std::uint16_t>((a[i] + b[i]) % p_);
    return c;
}

FpVec FiniteRing::sub(const FpVec& a, const FpVec& b) const {
    FpVec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = static_cast<std::uint16_t>((a[i] + p_ - b[i]) % p_);
    return c;
}

FpVec FiniteRing::scale(std::uint32_t c, const FpVec& a) const {
    FpVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i] = static_cast<std::uint16_t>(
            static_cast<std::uint64_t>(c % p_) * a[i] % p_);
    return out;
}

FpVec FiniteRing::mul(const FpVec& a, const FpVec& b) const {
    FpVec c(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            std::uint64_t coef = static_cast<std::uint64_t>(a[i]) * b[j] % p_;
            const FpVec& t = table_[i * dim() + j];
            for (std::size_t k = 0; k < dim(); ++k)
                c[k] = static_cast<std::uint16_t>((c[k] + coef * t[k]) % p_);
        }
    }
    return c;
}

FpVec FiniteRing::pow(const FpVec& a, std::uint64_t n) const {
    FpVec result = one_vec();
    FpVec base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

bool FiniteRing::is_zero(const FpVec& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint16_t x) { return x == 0; });
}

// Solves (mult-by-a) x = 1 by Gaussian elimination on the regular
// representation; a is a unit iff the matrix is invertible.
std::optional<FpVec> FiniteRing::inverse(const FpVec& a) const {
    std::size_t d = dim();
    // aug[i] = row i of [M | e_1] where column j of M is a * e_j
    std::vector<std::vector<std::uint32_t>> aug(d, std::vector<std::uint32_t>(d + 1, 0));
    for (std::size_t j = 0; j < d; ++j) {
        FpVec ej(d, 0);
        ej[j] = 1;
        FpVec col = mul(a, ej);
        for (std::size_t i = 0; i < d; ++i) aug[i][j] = col[i];
    }
    aug[0][d] = 1;
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < d && row < d; ++col) {
        std::size_t piv = d;
        for (std::size_t r = row; r < d; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv == d) return std::nullopt;  // rank deficit: not a unit
        std::swap(aug[row], aug[piv]);
        std::uint32_t inv = static_cast<std::uint32_t>(mod_inverse(aug[row][col], p_));
        for (std::size_t c = col; c <= d; ++c)
            aug[row][c] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(aug[row][c]) * inv % p_);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            std::uint64_t f = aug[r][col];
            for (std::size_t c = col; c <= d; ++c)
                aug[r][c] = static_cast<std::uint32_t>(
                    (aug[r][c] + static_cast<std::uint64_t>(p_ - 1) * f % p_ * aug[row][c]) % p_);
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row < d) return std::nullopt;
    FpVec x(d, 0);
    for (std::size_t r = 0; r < d; ++r)
        x[pivot_col[r]] = static_cast<std::uint16_t>(aug[r][d]);
    return x;
}

bool FiniteRing::is_unit(const FpVec& a) const { return inverse(a).has_value(); }

// r nilpotent iff its regular representation is, and a nilpotent d x d
// matrix has vanishing d-th power, so r^dim == 0 decides it.
bool FiniteRing::is_nilpotent(const FpVec& a) const {
    return is_zero(pow(a, dim()));
}

const Subspace& FiniteRing::maximal_ideal() const {
    if (!local_)
        throw domain_error("finite ring: " + ring_->describe() + " is not local");
    return max_ideal_;
}

Subspace FiniteRing::ideal_span(const std::vector<FpVec>& gens) const {
    std::vector<FpVec> vecs;
    for (const FpVec& g : gens)
        for (std::size_t i = 0; i < dim(); ++i) {
            FpVec ei(dim(), 0);
            ei[i] = 1;
            vecs.push_back(mul(g, ei));
        }
    return Subspace::span(p_, dim(), vecs);
}

bool FiniteRing::is_ideal(const Subspace& s) const {
    for (const FpVec& row : s.rows())
        for (std::size_t i = 0; i < dim(); ++i) {
            FpVec ei(dim(), 0);
            ei[i] = 1;
            if (!s.contains(mul(row, ei))) return false;
        }
    return true;
}

Subspace FiniteRing::ideal_mul(const Subspace& a, const Subspace& b) const {
    std::vector<FpVec> prods;
    for (const FpVec& u : a.rows())
        for (const FpVec& v : b.rows())
            prods.push_back(mul(u, v));
    return Subspace::span(p_, dim(), prods);
}

Subspace FiniteRing::ideal_colon(const Subspace& a, const Subspace& b) const {
    std::vector<FpVec> found;
    for (std::size_t idx = 0; idx < size_; ++idx) {
        FpVec r = element(idx);
        bool ok = true;
        for (const FpVec& v : b.rows())
            if (!a.contains(mul(r, v))) { ok = false; break; }
        if (ok) found.push_back(std::move(r));
    }
    return Subspace::span(p_, dim(), found);
}

bool FiniteRing::is_prime_ideal(const Subspace& s) const {
    if (!is_ideal(s) || s.contains(one_vec())) return false;
    std::vector<FpVec> outside;
    for (std::size_t idx = 0; idx < size_; ++idx) {
        FpVec r = element(idx);
        if (!s.contains(r)) outside.push_back(std::move(r));
    }
    for (const FpVec& x : outside)
        for (const FpVec& y : outside)
            if (s.contains(mul(x, y))) return false;
    return true;
}

Subspace FiniteRing::nilradical() const {
    std::vector<FpVec> nil;
    for (std::size_t idx = 0; idx < size_; ++idx) {
        FpVec r = element(idx);
        if (is_nilpotent(r)) nil.push_back(std::move(r));
    }
    return Subspace::span(p_, dim(), nil);
}

Ideal FiniteRing::to_ideal(const Subspace& s) const {
    std::vector<Polynomial> gens;
    for (const FpVec& row : s.rows()) gens.push_back(poly(row));
    return Ideal(ring_, gens);
}

Subspace FiniteRing::to_subspace(const Ideal& I) const {
    if (!same_ring(I.ring(), ring_))
        throw ring_mismatch_error("finite ring: ideal lives in a different ring");
    std::vector<FpVec> gens;
    for (const Polynomial& g : I.canonical_gens()) gens.push_back(vec(g));
    return ideal_span(gens);
}

// ---------------------------------------------------------------------------
// IdealLattice

bool IdealLattice::contains(const Subspace& s) const {
    return std::binary_search(ideals.begin(), ideals.end(), s);
}

std::size_t IdealLattice::index_of(const Subspace& s) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), s);
    if (it == ideals.end() || !(*it == s))
        throw domain_error("lattice: subspace is not an ideal of the ring");
    return static_cast<std::size_t>(it - ideals.begin());
}

IdealLattice enumerate_ideals(const FiniteRing& R, std::size_t cap) {
    // Distinct principal ideals first.
    std::map<std::string, Subspace> principal;
    for (std::size_t idx = 0; idx < R.size(); ++idx) {
        Subspace s = R.ideal_span({R.element(idx)});
        principal.emplace(s.key(), std::move(s));
    }
    std::map<std::string, Subspace> seen;
    std::vector<Subspace> queue;
    Subspace bottom = Subspace::zero(R.characteristic(), R.dim());
    seen.emplace(bottom.key(), bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
        Subspace cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& [k, pr] : principal) {
            Subspace s = cur.sum(pr);
            if (seen.emplace(s.key(), s).second) {
                if (seen.size() > cap)
                    throw resource_error("lattice: more than " + std::to_string(cap) +
                                         " ideals");
                queue.push_back(std::move(s));
            }
        }
    }
    IdealLattice lat;
    lat.ideals.reserve(seen.size());
    for (auto& [k, s] : seen) lat.ideals.push_back(std::move(s));
    std::sort(lat.ideals.begin(), lat.ideals.end());
    return lat;
}

std::size_t minimal_generator_count(const FiniteRing& R, const Subspace& I) {
    const Subspace& m = R.maximal_ideal();
    return I.dim() - R.ideal_mul(m, I).dim();
}

}  // namespace idealclose
