#include "idealclose/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace idealclose {

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
    const auto& ra = a.ring();
    const auto& rb = b.ring();
    if (ra == rb) return;
    if (!ra || !rb || ra->characteristic != rb->characteristic || ra->nvars() != rb->nvars() ||
        !(ra->order == rb->order))
        throw ring_mismatch_error("polynomial operands live in incompatible rings");
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) {
    return from_terms(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    return term(std::move(ring), Monomial(0u), c);
}

Polynomial Polynomial::one(RingPtr ring) {
    return constant(std::move(ring), Rational(1));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw domain_error("variable index out of range");
    Monomial m(ring->nvars());
    m.exps[index] = 1;
    return term(std::move(ring), m, Rational(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
    if (m.nvars() == 0) m = Monomial(ring->nvars());
    if (m.nvars() != ring->nvars()) throw domain_error("monomial has wrong variable count");
    return from_terms(std::move(ring), {Term{std::move(m), c}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const std::uint32_t p = ring->characteristic;
    for (auto& t : terms) t.coeff = cf_normalize(t.coeff, p);
    const MonomialOrder ord = ring->order;
    std::sort(terms.begin(), terms.end(),
              [&ord](const Term& a, const Term& b) { return compare(a.mono, b.mono, ord) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff = cf_add(merged.back().coeff, t.coeff, p);
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coeff == 0; }),
                 merged.end());
    Polynomial f;
    f.ring_ = std::move(ring);
    f.terms_ = std::move(merged);
    if (f.ring_->is_quotient()) return f.reduced_in_ring();
    return f;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw domain_error("leading term of the zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

namespace {

/// Merge of two descending term lists; sign ? a+b : a-b.
Polynomial merge_signed(const Polynomial& a, const Polynomial& b, bool add) {
    const auto& ring = a.ring() ? a.ring() : b.ring();
    const std::uint32_t p = ring->characteristic;
    const MonomialOrder ord = ring->order;
    std::vector<Polynomial::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = compare(ta[i].mono, tb[j].mono, ord);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            out.push_back({tb[j].mono, add ? tb[j].coeff : cf_neg(tb[j].coeff, p)});
            ++j;
        } else {
            Rational s = add ? cf_add(ta[i].coeff, tb[j].coeff, p)
                             : cf_sub(ta[i].coeff, tb[j].coeff, p);
            if (s != 0) out.push_back({ta[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j)
        out.push_back({tb[j].mono, add ? tb[j].coeff : cf_neg(tb[j].coeff, p)});
    return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(*this, o);
    return merge_signed(*this, o, true);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(*this, o);
    return merge_signed(*this, o, false);
}

Polynomial Polynomial::operator-() const {
    return scaled(Rational(-1));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(*this, o);
    const std::uint32_t p = ring_->characteristic;
    struct Desc {
        MonomialOrder ord;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return compare(a, b, ord) > 0;
        }
    };
    std::map<Monomial, Rational, Desc> acc(Desc{ring_->order});
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms()) {
            Monomial m = ta.mono * tb.mono;
            Rational c = cf_mul(ta.coeff, tb.coeff, p);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second = cf_add(it->second, c, p);
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, c});
    Polynomial f;
    f.ring_ = ring_;
    f.terms_ = std::move(out);
    if (ring_->is_quotient()) return f.reduced_in_ring();
    return f;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (is_zero() && o.is_zero()) return true;
    check_compatible(*this, o);
    return terms_ == o.terms_;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    const std::uint32_t p = ring_->characteristic;
    Rational cc = cf_normalize(c, p);
    if (cc == 0) return zero(ring_);
    Polynomial f;
    f.ring_ = ring_;
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_) f.terms_.push_back({t.mono, cf_mul(t.coeff, cc, p)});
    return f;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
    const std::uint32_t p = ring_->characteristic;
    Rational cc = cf_normalize(c, p);
    if (cc == 0) return zero(ring_);
    Polynomial f;
    f.ring_ = ring_;
    f.terms_.reserve(terms_.size());
    // multiplying by a fixed monomial preserves the relative term order
    for (const auto& t : terms_) f.terms_.push_back({t.mono * m, cf_mul(t.coeff, cc, p)});
    return f;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
    Polynomial acc = one(ring_);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::frobenius_power(std::uint32_t e) const {
    const std::uint32_t p = ring_->characteristic;
    if (p == 0) throw domain_error("frobenius power needs positive characteristic");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1ull << 24)) throw resource_error("frobenius exponent p^e too large");
    }
    Polynomial f;
    f.ring_ = ring_;
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        f.terms_.push_back({t.mono.pow(static_cast<std::uint32_t>(q)),
                            cf_pow(t.coeff, q, p)});
    if (ring_->is_quotient()) return f.reduced_in_ring();
    return f;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(cf_inv(terms_.front().coeff, ring_->characteristic));
}

Polynomial Polynomial::reduced_in_ring() const {
    if (!ring_->is_quotient()) return *this;
    Polynomial raw;
    raw.ring_ = ring_;
    raw.terms_ = terms_;
    return normal_form(raw, ring_->quotient);
}

Polynomial Polynomial::raw(RingPtr ring, std::vector<Term> terms) {
    Polynomial f;
    f.ring_ = std::move(ring);
    f.terms_ = std::move(terms);
    return f;
}

namespace {

/// a - b on raw descending term vectors; b's terms are negated on the fly.
std::vector<Polynomial::Term> raw_sub(const std::vector<Polynomial::Term>& a,
                                      const std::vector<Polynomial::Term>& b,
                                      const MonomialOrder& ord, std::uint32_t p) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = compare(a[i].mono, b[j].mono, ord);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, cf_neg(b[j].coeff, p)});
            ++j;
        } else {
            Rational s = cf_sub(a[i].coeff, b[j].coeff, p);
            if (s != 0) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, cf_neg(b[j].coeff, p)});
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    return normal_form(f, basis, nullptr, 0);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       std::uint64_t* steps, std::uint64_t step_limit) {
    if (f.is_zero() || basis.empty()) return f;
    const RingPtr& ring = f.ring();
    const std::uint32_t p = ring->characteristic;
    const MonomialOrder ord = ring->order;
    std::vector<Polynomial::Term> h = f.terms();
    std::vector<Polynomial::Term> remainder;
    while (!h.empty()) {
        if (steps && ++*steps > step_limit)
            throw resource_error("normal form exceeded the reduction-step budget");
        const Polynomial::Term lt = h.front();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            // lt is irreducible; every later term of h is strictly smaller,
            // so the remainder stays sorted descending
            remainder.push_back(lt);
            h.erase(h.begin());
            continue;
        }
        Rational c = cf_div(lt.coeff, reducer->leading_term().coeff, p);
        Monomial shift = lt.mono.divide_by(reducer->leading_monomial());
        std::vector<Polynomial::Term> prod;
        prod.reserve(reducer->terms().size());
        for (const auto& t : reducer->terms())
            prod.push_back({t.mono * shift, cf_mul(t.coeff, c, p)});
        h = raw_sub(h, prod, ord, p);
    }
    return Polynomial::raw(ring, std::move(remainder));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const std::uint32_t p = ring_->characteristic;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = p == 0 && c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) c = -c;
        std::string mono;
        {
            std::ostringstream ms;
            bool firstv = true;
            for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
                if (t.mono.exps[i] == 0) continue;
                if (!firstv) ms << "*";
                firstv = false;
                ms << ring_->vars[i];
                if (t.mono.exps[i] > 1) ms << "^" << t.mono.exps[i];
            }
            mono = ms.str();
        }
        if (mono.empty()) {
            os << cf_to_string(c);
        } else if (c == 1) {
            os << mono;
        } else {
            os << cf_to_string(c) << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& s) : text(s) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "' at offset " +
                              std::to_string(pos) + " in \"" + text + "\"");
    }

    bool at_number() { return std::isdigit(static_cast<unsigned char>(peek())); }

    bool at_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    Integer number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw parse_error("expected a number at offset " + std::to_string(pos));
        return Integer(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos)
            throw parse_error("expected an identifier at offset " + std::to_string(pos));
        return text.substr(start, pos - start);
    }
};

class PolyParser {
public:
    PolyParser(const RingPtr& ring, const std::string& text) : ring_(ring), lex_(text) {}

    Polynomial parse() {
        Polynomial f = expr();
        if (!lex_.eof())
            throw parse_error("trailing input at offset " + std::to_string(lex_.pos) + " in \"" +
                              lex_.text + "\"");
        return f;
    }

private:
    RingPtr ring_;
    Lexer lex_;

    std::uint32_t exponent() {
        Integer n = lex_.number();
        if (n < 0 || n > 1000000) throw parse_error("exponent out of range");
        return static_cast<std::uint32_t>(n);
    }

    Polynomial expr() {
        bool neg = false;
        if (lex_.accept('-'))
            neg = true;
        else
            lex_.accept('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (lex_.accept('+'))
                acc = acc + term();
            else if (lex_.accept('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    bool at_factor() {
        return lex_.at_number() || lex_.at_ident() || lex_.peek() == '(';
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (lex_.accept('*')) {
                acc = acc * factor();
            } else if (at_factor()) {
                // juxtaposition, e.g. "3x" or "2 x^2"
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        if (lex_.at_number()) {
            Integer num = lex_.number();
            if (lex_.accept('/')) {
                Integer den = lex_.number();
                if (den == 0) throw parse_error("zero denominator");
                return Polynomial::constant(ring_, Rational(num, den));
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        if (lex_.at_ident()) {
            std::string name = lex_.ident();
            int idx = ring_->var_index(name);
            if (idx < 0)
                throw parse_error("unknown variable \"" + name + "\" in ring " +
                                  ring_->describe());
            Polynomial v = Polynomial::variable(ring_, static_cast<std::size_t>(idx));
            if (lex_.accept('^')) return v.pow(exponent());
            return v;
        }
        if (lex_.accept('(')) {
            Polynomial inner = expr();
            lex_.expect(')');
            if (lex_.accept('^')) return inner.pow(exponent());
            return inner;
        }
        throw parse_error("unexpected character '" + std::string(1, lex_.peek()) +
                          "' at offset " + std::to_string(lex_.pos) + " in \"" + lex_.text + "\"");
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return PolyParser(ring, text).parse();
}

}  // namespace idealclose
