#include "idealclose/session.hpp"

#include "idealclose/closures.hpp"
#include "idealclose/lab.hpp"
#include "idealclose/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <utility>

namespace idealclose {

namespace {

std::string with_position(const std::string& what, std::size_t line, std::size_t column) {
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) +
           ")";
}

}  // namespace

session_parse_error::session_parse_error(const std::string& what, std::size_t line,
                                         std::size_t column)
    : std::runtime_error(with_position(what, line, column)), line_(line), column_(column) {}

std::string ClosureExpr::to_string() const {
    if (head == "ref") return name;
    if (head == "frob") return number ? "frob(" + std::to_string(*number) + ")" : "frob";
    if (head == "sat" || head == "modclosure") return head + "(" + ideal_args.front() + ")";
    if (head == "delta") {
        std::string out = "delta[";
        for (std::size_t i = 0; i < ideal_args.size(); ++i) {
            if (i) out += ", ";
            out += ideal_args[i];
        }
        return out + "]";
    }
    if (head == "contract") return "contract(" + name + ", " + args.front().to_string() + ")";
    if (head == "meet" || head == "hull" || head == "cw") {
        std::string out = head + "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out += ", ";
            out += args[i].to_string();
        }
        return out + ")";
    }
    return head;  // identity, indiscrete, radical, intclosure, bf, vop
}

namespace {

// ---------------------------------------------------------------------------
// Parsing.

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words = {
        "ring",      "ideal",      "map",       "closure",  "budget",     "check",
        "compute",   "report",     "assert",    "poly",     "in",         "not",
        "on",        "along",      "strict",    "expect",   "violation",  "lattice",
        "family",    "identity",   "indiscrete", "radical", "sat",        "frob",
        "intclosure", "bf",        "delta",     "vop",      "modclosure", "meet",
        "hull",      "cw",         "contract",  "axioms",   "basics",     "semiprime",
        "exhaustive", "nakayama",  "persistence", "spread", "reductions", "census"};
    return words;
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// Declared names, tracked per kind so references resolve during the parse.
struct Names {
    std::set<std::string> rings, ideals, maps, closures;
    std::map<std::string, std::vector<std::string>> ring_vars;
};

struct Cursor {
    const std::string& s;
    std::size_t line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw session_parse_error(msg, line, pos + 1);
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_punct(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void punct(char c) {
        if (!try_punct(c)) fail(std::string("expected '") + c + "'");
    }
    std::size_t mark() {
        skip_ws();
        return pos;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && ident_char(s[pos])) ++pos;
        if (pos == start) fail("expected a name");
        if (std::isdigit(static_cast<unsigned char>(s[start]))) {
            pos = start;
            fail("names must not start with a digit");
        }
        return s.substr(start, pos - start);
    }
    bool try_keyword(const std::string& word) {
        skip_ws();
        std::size_t end = pos;
        while (end < s.size() && ident_char(s[end])) ++end;
        if (s.compare(pos, end - pos, word) != 0 || end - pos != word.size()) return false;
        pos = end;
        return true;
    }
    void keyword(const std::string& word) {
        if (!try_keyword(word)) fail("expected '" + word + "'");
    }
    void arrow() {
        skip_ws();
        if (s.compare(pos, 2, "->") != 0) fail("expected '->'");
        pos += 2;
    }
    std::uint64_t number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoull(s.substr(start, pos - start));
    }
    // Raw text up to the next top-level occurrence of one of the stop
    // characters, which is not consumed.  Depth counts both () and [].
    std::string raw_until(const std::string& stops) {
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') {
                if (depth == 0 && stops.find(c) != std::string::npos) break;
                --depth;
            } else if (depth == 0 && stops.find(c) != std::string::npos) {
                break;
            }
            ++pos;
        }
        std::string out = trimmed(s.substr(start, pos - start));
        if (out.empty()) fail("expected a polynomial");
        return out;
    }
    // Raw text up to the next top-level standalone stop word, which is not
    // consumed; used to delimit polynomial text by a keyword.
    std::string raw_until_word(const std::set<std::string>& stops) {
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        std::size_t i = pos;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (depth == 0 && std::isalpha(static_cast<unsigned char>(c)) &&
                (i == 0 || !ident_char(s[i - 1]))) {
                std::size_t j = i;
                while (j < s.size() && ident_char(s[j])) ++j;
                if (stops.count(s.substr(i, j - i))) {
                    std::string out = trimmed(s.substr(start, i - start));
                    if (out.empty()) fail("expected a polynomial");
                    pos = i;
                    return out;
                }
                i = j;
                continue;
            }
            ++i;
        }
        pos = i;
        fail("expected 'in'");
    }
    // A parenthesized group including its delimiters, nesting respected.
    std::string balanced_group() {
        skip_ws();
        if (peek() != '(') fail("expected '('");
        std::size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '(') ++depth;
            if (c == ')' && --depth == 0) {
                ++pos;
                return s.substr(start, pos - start);
            }
            ++pos;
        }
        fail("unbalanced '('");
    }
    // True when a top-level '=' occurs at or after the cursor.
    bool has_top_level_equals() const {
        int depth = 0;
        for (std::size_t i = pos; i < s.size(); ++i) {
            char c = s[i];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (depth == 0 && c == '=') return true;
        }
        return false;
    }
};

std::string fresh_name(Cursor& c, const std::set<std::string>& kind,
                       const std::string& what) {
    std::size_t at = c.mark();
    std::string name = c.ident();
    if (reserved_words().count(name)) {
        c.pos = at;
        c.fail("'" + name + "' is a reserved word");
    }
    if (kind.count(name)) {
        c.pos = at;
        c.fail("duplicate " + what + " name '" + name + "'");
    }
    return name;
}

std::string known_name(Cursor& c, const std::set<std::string>& kind,
                       const std::string& what) {
    std::size_t at = c.mark();
    std::string name = c.ident();
    if (!kind.count(name)) {
        c.pos = at;
        c.fail("unknown " + what + " '" + name + "'");
    }
    return name;
}

// A declared ideal name or an inline generator list kept as raw text.
std::string ideal_ref(Cursor& c, const Names& names) {
    if (c.peek() == '(') return c.balanced_group();
    return known_name(c, names.ideals, "ideal");
}

ClosureExpr parse_expr(Cursor& c, const Names& names) {
    std::size_t at = c.mark();
    std::string head = c.ident();
    ClosureExpr e;
    e.head = head;
    if (head == "identity" || head == "indiscrete" || head == "radical" ||
        head == "intclosure" || head == "bf" || head == "vop")
        return e;
    if (head == "frob") {
        // a numeric group is the stage cap; anything else (an application
        // like "frob(z)" in compute or assert) belongs to the caller
        std::size_t save = c.pos;
        if (c.try_punct('(') && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            std::uint64_t n = c.number();
            if (n == 0 || n > 64) c.fail("frob stage cap must lie in 1..64");
            e.number = static_cast<std::uint32_t>(n);
            c.punct(')');
        } else {
            c.pos = save;
        }
        return e;
    }
    if (head == "sat" || head == "modclosure") {
        c.punct('(');
        e.ideal_args.push_back(ideal_ref(c, names));
        c.punct(')');
        return e;
    }
    if (head == "delta") {
        c.punct('[');
        e.ideal_args.push_back(ideal_ref(c, names));
        while (c.try_punct(',')) e.ideal_args.push_back(ideal_ref(c, names));
        c.punct(']');
        return e;
    }
    if (head == "meet") {
        c.punct('(');
        e.args.push_back(parse_expr(c, names));
        while (c.try_punct(',')) e.args.push_back(parse_expr(c, names));
        c.punct(')');
        if (e.args.size() < 2) c.fail("meet needs at least two closures");
        return e;
    }
    if (head == "hull" || head == "cw") {
        c.punct('(');
        e.args.push_back(parse_expr(c, names));
        c.punct(')');
        return e;
    }
    if (head == "contract") {
        c.punct('(');
        e.name = known_name(c, names.maps, "map");
        c.punct(',');
        e.args.push_back(parse_expr(c, names));
        c.punct(')');
        return e;
    }
    if (names.closures.count(head)) {
        e.head = "ref";
        e.name = head;
        return e;
    }
    c.pos = at;
    c.fail("unknown closure '" + head + "'");
}

RingStmt parse_ring(Cursor& c, Names& names) {
    RingStmt st;
    st.name = fresh_name(c, names.rings, "ring");
    c.punct('=');
    c.keyword("poly");
    c.punct('(');
    std::size_t at = c.mark();
    std::string field = c.ident();
    if (field == "Q") {
        st.characteristic = 0;
    } else if (field.size() > 1 && field[0] == 'F' &&
               std::all_of(field.begin() + 1, field.end(), [](char ch) {
                   return std::isdigit(static_cast<unsigned char>(ch));
               })) {
        st.characteristic = static_cast<std::uint32_t>(std::stoul(field.substr(1)));
    } else {
        c.pos = at;
        c.fail("expected a coefficient field, 'Q' or 'Fp'");
    }
    c.punct(';');
    do {
        std::size_t vat = c.mark();
        std::string v = c.ident();
        if (reserved_words().count(v)) {
            c.pos = vat;
            c.fail("'" + v + "' is a reserved word");
        }
        if (std::find(st.vars.begin(), st.vars.end(), v) != st.vars.end()) {
            c.pos = vat;
            c.fail("duplicate variable '" + v + "'");
        }
        st.vars.push_back(v);
    } while (c.try_punct(','));
    if (c.try_punct('|')) {
        do st.relations.push_back(c.raw_until(",)"));
        while (c.try_punct(','));
    }
    c.punct(')');
    names.rings.insert(st.name);
    names.ring_vars[st.name] = st.vars;
    return st;
}

IdealStmt parse_ideal(Cursor& c, Names& names) {
    IdealStmt st;
    st.name = fresh_name(c, names.ideals, "ideal");
    c.punct('=');
    c.punct('(');
    if (!c.try_punct(')')) {
        do st.gens.push_back(c.raw_until(",)"));
        while (c.try_punct(','));
        c.punct(')');
    }
    c.keyword("in");
    st.ring = known_name(c, names.rings, "ring");
    names.ideals.insert(st.name);
    return st;
}

MapStmt parse_map(Cursor& c, Names& names) {
    MapStmt st;
    st.name = fresh_name(c, names.maps, "map");
    c.punct(':');
    st.source = known_name(c, names.rings, "ring");
    c.arrow();
    st.target = known_name(c, names.rings, "ring");
    c.punct('=');
    c.punct('[');
    const std::vector<std::string>& vars = names.ring_vars.at(st.source);
    do {
        std::size_t at = c.mark();
        std::string v = c.ident();
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
            c.pos = at;
            c.fail("'" + v + "' is not a variable of " + st.source);
        }
        for (const auto& [w, img] : st.images)
            if (w == v) {
                c.pos = at;
                c.fail("duplicate image for variable '" + v + "'");
            }
        c.arrow();
        st.images.emplace_back(v, c.raw_until(",]"));
    } while (c.try_punct(','));
    c.punct(']');
    if (st.images.size() != vars.size()) c.fail("every variable of " + st.source + " needs an image");
    names.maps.insert(st.name);
    return st;
}

ClosureStmt parse_closure(Cursor& c, Names& names) {
    ClosureStmt st;
    st.name = fresh_name(c, names.closures, "closure");
    c.punct('=');
    st.expr = parse_expr(c, names);
    names.closures.insert(st.name);
    return st;
}

BudgetStmt parse_budget(Cursor& c) {
    static const std::set<std::string> keys = {"e_max", "n_max", "word_max", "mono_max"};
    BudgetStmt st;
    do {
        std::size_t at = c.mark();
        std::string key = c.ident();
        if (!keys.count(key)) {
            c.pos = at;
            c.fail("unknown budget key '" + key + "'");
        }
        c.punct('=');
        st.settings.emplace_back(key, c.number());
    } while (c.try_punct(','));
    return st;
}

CheckStmt parse_check(Cursor& c, const Names& names) {
    static const std::set<std::string> kinds = {"axioms",     "basics",   "semiprime",
                                                "exhaustive", "nakayama", "persistence"};
    CheckStmt st;
    std::size_t at = c.mark();
    st.kind = c.ident();
    if (!kinds.count(st.kind)) {
        c.pos = at;
        c.fail("unknown check kind '" + st.kind + "'");
    }
    st.expr = parse_expr(c, names);
    if (st.kind == "persistence") {
        c.keyword("along");
        st.map = known_name(c, names.maps, "map");
    } else if (c.try_keyword("along")) {
        c.fail("'along' only applies to persistence checks");
    }
    c.keyword("on");
    if (c.try_keyword("lattice")) {
        c.punct('(');
        st.lattice_ring = known_name(c, names.rings, "ring");
        c.punct(')');
    } else if (c.try_keyword("family")) {
        st.lattice_scope = false;
        c.punct('(');
        do st.family.push_back(known_name(c, names.ideals, "ideal"));
        while (c.try_punct(','));
        c.punct(')');
        if (st.kind == "nakayama" || st.kind == "exhaustive")
            c.fail(st.kind + " checks need a lattice scope");
    } else {
        c.fail("expected 'lattice(R)' or 'family(I, ...)'");
    }
    for (;;) {
        if (c.try_keyword("strict")) {
            st.strict = true;
        } else if (c.try_keyword("expect")) {
            c.keyword("violation");
            st.expect_violation = true;
        } else {
            break;
        }
    }
    return st;
}

ComputeStmt parse_compute(Cursor& c, const Names& names) {
    ComputeStmt st;
    st.expr = parse_expr(c, names);
    c.punct('(');
    st.ideal = known_name(c, names.ideals, "ideal");
    c.punct(')');
    return st;
}

ReportStmt parse_report(Cursor& c, const Names& names) {
    static const std::set<std::string> kinds = {"spread", "reductions", "census"};
    ReportStmt st;
    std::size_t at = c.mark();
    st.kind = c.ident();
    if (!kinds.count(st.kind)) {
        c.pos = at;
        c.fail("unknown report kind '" + st.kind + "'");
    }
    st.expr = parse_expr(c, names);
    if (st.kind != "census") st.ideal = known_name(c, names.ideals, "ideal");
    c.keyword("in");
    st.ring = known_name(c, names.rings, "ring");
    return st;
}

AssertStmt parse_assert(Cursor& c, const Names& names) {
    AssertStmt st;
    if (c.has_top_level_equals()) {
        st.form = AssertStmt::Form::equals;
        st.expr = parse_expr(c, names);
        c.punct('(');
        st.ideal = known_name(c, names.ideals, "ideal");
        c.punct(')');
        c.punct('=');
        st.rhs = ideal_ref(c, names);
        return st;
    }
    st.poly = c.raw_until_word({"in", "not"});
    if (c.try_keyword("not")) {
        st.form = AssertStmt::Form::not_member;
        c.keyword("in");
    } else {
        st.form = AssertStmt::Form::member;
        c.keyword("in");
    }
    st.expr = parse_expr(c, names);
    c.punct('(');
    st.ideal = known_name(c, names.ideals, "ideal");
    c.punct(')');
    return st;
}

}  // namespace

Session parse_session(const std::string& text) {
    Session session;
    Names names;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::string body = trimmed(raw);
        if (body.empty()) {
            if (start > text.size()) break;
            continue;
        }
        Cursor c{raw, line_no};
        Statement st;
        st.line = line_no;
        st.text = body;
        std::size_t at = c.mark();
        std::string kw = c.ident();
        if (kw == "ring")
            st.node = parse_ring(c, names);
        else if (kw == "ideal")
            st.node = parse_ideal(c, names);
        else if (kw == "map")
            st.node = parse_map(c, names);
        else if (kw == "closure")
            st.node = parse_closure(c, names);
        else if (kw == "budget")
            st.node = parse_budget(c);
        else if (kw == "check")
            st.node = parse_check(c, names);
        else if (kw == "compute")
            st.node = parse_compute(c, names);
        else if (kw == "report")
            st.node = parse_report(c, names);
        else if (kw == "assert")
            st.node = parse_assert(c, names);
        else {
            c.pos = at;
            c.fail("unknown statement '" + kw + "'");
        }
        if (!c.at_end()) c.fail("unexpected trailing input");
        session.statements.push_back(std::move(st));
        if (start > text.size()) break;
    }
    return session;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

struct StatementPrinter {
    std::string operator()(const RingStmt& st) const {
        std::string field = st.characteristic == 0 ? "Q" : "F" + std::to_string(st.characteristic);
        std::string out = "ring " + st.name + " = poly(" + field + "; " + join(st.vars, ", ");
        if (!st.relations.empty()) out += " | " + join(st.relations, ", ");
        return out + ")";
    }
    std::string operator()(const IdealStmt& st) const {
        return "ideal " + st.name + " = (" + join(st.gens, ", ") + ") in " + st.ring;
    }
    std::string operator()(const MapStmt& st) const {
        std::vector<std::string> images;
        images.reserve(st.images.size());
        for (const auto& [v, img] : st.images) images.push_back(v + " -> " + img);
        return "map " + st.name + " : " + st.source + " -> " + st.target + " = [" +
               join(images, ", ") + "]";
    }
    std::string operator()(const ClosureStmt& st) const {
        return "closure " + st.name + " = " + st.expr.to_string();
    }
    std::string operator()(const BudgetStmt& st) const {
        std::vector<std::string> parts;
        parts.reserve(st.settings.size());
        for (const auto& [k, v] : st.settings) parts.push_back(k + " = " + std::to_string(v));
        return "budget " + join(parts, ", ");
    }
    std::string operator()(const CheckStmt& st) const {
        std::string out = "check " + st.kind + " " + st.expr.to_string();
        if (st.kind == "persistence") out += " along " + st.map;
        out += st.lattice_scope ? " on lattice(" + st.lattice_ring + ")"
                                : " on family(" + join(st.family, ", ") + ")";
        if (st.strict) out += " strict";
        if (st.expect_violation) out += " expect violation";
        return out;
    }
    std::string operator()(const ComputeStmt& st) const {
        return "compute " + st.expr.to_string() + "(" + st.ideal + ")";
    }
    std::string operator()(const ReportStmt& st) const {
        std::string out = "report " + st.kind + " " + st.expr.to_string();
        if (st.kind != "census") out += " " + st.ideal;
        return out + " in " + st.ring;
    }
    std::string operator()(const AssertStmt& st) const {
        std::string call = st.expr.to_string() + "(" + st.ideal + ")";
        switch (st.form) {
            case AssertStmt::Form::member: return "assert " + st.poly + " in " + call;
            case AssertStmt::Form::not_member:
                return "assert " + st.poly + " not in " + call;
            case AssertStmt::Form::equals: return "assert " + call + " = " + st.rhs;
        }
        return "";
    }
};

}  // namespace

std::string print_session(const Session& s) {
    std::string out;
    for (const Statement& st : s.statements) {
        out += std::visit(StatementPrinter{}, st.node);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Execution.

namespace {

struct Env {
    std::map<std::string, RingPtr> rings;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, RingMap> maps;
    std::map<std::string, ClosureExpr> closures;
    // keyed by presentation; a null entry marks a ring as not finite
    std::map<std::string, std::shared_ptr<FiniteRing>> finite_cache;
    Budget budget;
    bool strict_all = false;
};

std::shared_ptr<FiniteRing> try_finite(Env& env, const RingPtr& R) {
    const std::string key = R->describe();
    auto it = env.finite_cache.find(key);
    if (it != env.finite_cache.end()) return it->second;
    std::shared_ptr<FiniteRing> F;
    try {
        F = std::make_shared<FiniteRing>(FiniteRing::build(R));
    } catch (const domain_error&) {
        F = nullptr;
    }
    env.finite_cache.emplace(key, F);
    return F;
}

std::shared_ptr<FiniteRing> finite_required(Env& env, const RingPtr& R,
                                            const std::string& what) {
    std::shared_ptr<FiniteRing> F = try_finite(env, R);
    if (!F) throw domain_error(what + " requires a finite ring, got " + R->describe());
    return F;
}

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        char c = i < text.size() ? text[i] : ',';
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            std::string piece = trimmed(text.substr(start, i - start));
            if (!piece.empty()) parts.push_back(piece);
            start = i + 1;
        }
    }
    return parts;
}

// A declared name or inline "(f, g)" text, resolved against R.
Ideal resolve_ideal_ref(Env& env, const std::string& text, const RingPtr& R) {
    if (!text.empty() && text.front() == '(') {
        std::string inner = text.substr(1, text.size() - 2);
        return ideal_from_strings(R, split_top_level(inner));
    }
    const Ideal& I = env.ideals.at(text);
    if (!same_ring(I.ring(), R))
        throw ring_mismatch_error("ideal " + text + " lives in " + I.ring()->describe() +
                                  ", not in " + R->describe());
    return I;
}

ClosureOperation instantiate(Env& env, const ClosureExpr& e, const RingPtr& R) {
    if (e.head == "identity") return identity_closure();
    if (e.head == "indiscrete") return indiscrete_closure();
    if (e.head == "radical") {
        std::shared_ptr<FiniteRing> F = try_finite(env, R);
        return F ? radical_closure(*F) : radical_closure();
    }
    if (e.head == "sat") return saturation_closure(resolve_ideal_ref(env, e.ideal_args.front(), R));
    if (e.head == "frob") {
        std::shared_ptr<FiniteRing> F = try_finite(env, R);
        if (F) return frobenius_closure(*F);
        return frobenius_closure(e.number.value_or(0));
    }
    if (e.head == "intclosure") return integral_closure_op();
    if (e.head == "bf") {
        std::shared_ptr<FiniteRing> F = try_finite(env, R);
        if (F) return basically_full_closure(F->to_ideal(F->maximal_ideal()));
        // graded-local reading: the variables generate the distinguished
        // maximal ideal, so every defining relation must lie under them
        for (const Polynomial& q : R->quotient)
            for (const auto& t : q.terms())
                if (t.mono.is_one())
                    throw domain_error("bf needs a local ring; a relation of " +
                                       R->describe() + " has a constant term");
        std::vector<Polynomial> vars;
        vars.reserve(R->nvars());
        for (std::size_t i = 0; i < R->nvars(); ++i) vars.push_back(Polynomial::variable(R, i));
        return basically_full_closure(Ideal(R, std::move(vars)));
    }
    if (e.head == "delta") {
        std::vector<Ideal> gens;
        gens.reserve(e.ideal_args.size());
        for (const std::string& t : e.ideal_args) gens.push_back(resolve_ideal_ref(env, t, R));
        std::shared_ptr<FiniteRing> F = try_finite(env, R);
        return F ? delta_closure(std::move(gens), *F) : delta_closure(std::move(gens));
    }
    if (e.head == "vop") return v_operation(*finite_required(env, R, "vop"));
    if (e.head == "modclosure")
        return construct_from_module(resolve_ideal_ref(env, e.ideal_args.front(), R));
    if (e.head == "meet") {
        std::vector<ClosureOperation> parts;
        parts.reserve(e.args.size());
        for (const ClosureExpr& a : e.args) parts.push_back(instantiate(env, a, R));
        return construct_intersection(std::move(parts));
    }
    if (e.head == "hull") return idempotent_hull(instantiate(env, e.args.front(), R));
    if (e.head == "cw") {
        std::shared_ptr<FiniteRing> F = finite_required(env, R, "cw");
        return construct_cw(*F, instantiate(env, e.args.front(), R), env.budget).op;
    }
    if (e.head == "contract") {
        const RingMap& phi = env.maps.at(e.name);
        if (!same_ring(phi.source(), R))
            throw ring_mismatch_error("contract(" + e.name + ", ...) applies to ideals of " +
                                      phi.source()->describe() + ", not " + R->describe());
        return construct_contraction(phi, instantiate(env, e.args.front(), phi.target()));
    }
    return instantiate(env, env.closures.at(e.name), R);
}

std::vector<Ideal> named_family(Env& env, const std::vector<std::string>& names) {
    std::vector<Ideal> family;
    family.reserve(names.size());
    for (const std::string& n : names) {
        const Ideal& I = env.ideals.at(n);
        if (!family.empty() && !same_ring(family.front().ring(), I.ring()))
            throw ring_mismatch_error("family ideals " + names.front() + " and " + n +
                                      " live in different rings");
        family.push_back(I);
    }
    return family;
}

struct Executor {
    Env& env;
    SessionResult& out;
    const Statement& stmt;

    void operator()(const RingStmt& st) const {
        RingPtr base = make_poly_ring(st.characteristic, st.vars);
        env.rings.emplace(st.name,
                          st.relations.empty() ? base : make_quotient_ring(base, st.relations));
    }
    void operator()(const IdealStmt& st) const {
        env.ideals.emplace(st.name, ideal_from_strings(env.rings.at(st.ring), st.gens));
    }
    void operator()(const MapStmt& st) const {
        const RingPtr& S = env.rings.at(st.source);
        const RingPtr& T = env.rings.at(st.target);
        std::vector<Polynomial> images;
        images.reserve(S->vars.size());
        for (const std::string& v : S->vars)
            for (const auto& [w, img] : st.images)
                if (w == v) images.push_back(parse_polynomial(T, img));
        env.maps.emplace(st.name, RingMap(S, T, std::move(images)));
    }
    void operator()(const ClosureStmt& st) const { env.closures.emplace(st.name, st.expr); }
    void operator()(const BudgetStmt& st) const {
        for (const auto& [key, value] : st.settings) {
            if (key != "mono_max" && value > 0xffffffffULL)
                throw domain_error("budget " + key + " is out of range");
            if (key == "e_max") env.budget.e_max = static_cast<std::uint32_t>(value);
            if (key == "n_max") env.budget.n_max = static_cast<std::uint32_t>(value);
            if (key == "word_max") env.budget.word_max = static_cast<std::uint32_t>(value);
            if (key == "mono_max") env.budget.mono_max = value;
        }
        env.budget.validate();
    }

    void operator()(const CheckStmt& st) const {
        CheckReport rep;
        std::string ring_label;
        if (st.kind == "persistence") {
            const RingMap& phi = env.maps.at(st.map);
            ring_label = phi.source()->describe();
            ClosureOperation src = instantiate(env, st.expr, phi.source());
            ClosureOperation tgt = instantiate(env, st.expr, phi.target());
            if (st.lattice_scope) {
                const RingPtr& R = env.rings.at(st.lattice_ring);
                if (!same_ring(R, phi.source()))
                    throw ring_mismatch_error("persistence lattice must be the source of " +
                                              st.map);
                rep = persistence_check(*finite_required(env, R, "persistence on a lattice"),
                                        phi, src, tgt, env.budget);
            } else {
                rep = persistence_check(phi, src, tgt, named_family(env, st.family), env.budget);
            }
        } else if (st.lattice_scope) {
            const RingPtr& R = env.rings.at(st.lattice_ring);
            ring_label = R->describe();
            std::shared_ptr<FiniteRing> F = finite_required(env, R, st.kind + " on a lattice");
            ClosureOperation cl = instantiate(env, st.expr, R);
            if (st.kind == "nakayama")
                rep = nakayama_check(*F, cl, env.budget);
            else if (st.kind == "exhaustive")
                rep = exhaustive_check(*F, cl, env.budget);
            else if (st.kind == "axioms")
                rep = check_axioms(cl, lattice_family(*F), env.budget);
            else if (st.kind == "basics")
                rep = check_basics(cl, lattice_family(*F), env.budget);
            else
                rep = semiprime_check(cl, lattice_family(*F), env.budget);
        } else {
            std::vector<Ideal> family = named_family(env, st.family);
            const RingPtr& R = family.front().ring();
            ring_label = R->describe();
            ClosureOperation cl = instantiate(env, st.expr, R);
            if (st.kind == "axioms")
                rep = check_axioms(cl, family, env.budget);
            else if (st.kind == "basics")
                rep = check_basics(cl, family, env.budget);
            else
                rep = semiprime_check(cl, family, env.budget);
        }
        bool failed = rep.has_failure();
        bool unknown = rep.has_unknown();
        out.report.merge(rep);
        if (st.expect_violation) {
            CheckRecord r;
            r.check = "expected-violation";
            r.ring = ring_label;
            r.closure = st.expr.to_string();
            r.status = failed ? "pass" : "fail";
            if (failed)
                r.extra.emplace_back("note", "violation expected and found");
            else
                r.witnesses.push_back("expected a violation, every sub-check passed");
            r.extra.emplace_back("command", stmt.text);
            out.report.add(std::move(r));
        }
        bool pass_like = st.expect_violation ? failed : !failed;
        if ((st.strict || env.strict_all) && unknown) pass_like = false;
        if (!pass_like) out.ok = false;
    }

    void operator()(const ComputeStmt& st) const {
        const Ideal& I = env.ideals.at(st.ideal);
        ClosureOperation cl = instantiate(env, st.expr, I.ring());
        Ideal res = cl.closure(I, env.budget);
        CheckRecord r;
        r.check = "compute";
        r.ring = I.ring()->describe();
        r.closure = cl.name();
        r.status = "pass";
        r.extra.emplace_back("input", st.ideal + " = " + I.to_string());
        r.extra.emplace_back("result", res.to_string());
        out.report.add(std::move(r));
    }

    void operator()(const ReportStmt& st) const {
        const RingPtr& R = env.rings.at(st.ring);
        std::shared_ptr<FiniteRing> F = finite_required(env, R, "report " + st.kind);
        ClosureOperation cl = instantiate(env, st.expr, R);
        if (st.kind == "census") {
            ClosedCensus census = closed_census(*F, cl, env.budget);
            CheckRecord r;
            r.check = "report/census";
            r.ring = R->describe();
            r.closure = cl.name();
            r.status = "pass";
            for (const Subspace& s : census.closed)
                r.witnesses.push_back(F->to_ideal(s).to_string());
            r.extra.emplace_back("closed-count", std::to_string(census.closed.size()));
            r.extra.emplace_back("zero-closed", census.zero_closed ? "true" : "false");
            r.extra.emplace_back("all-closed", census.all_closed ? "true" : "false");
            out.report.add(std::move(r));
            return;
        }
        const Ideal& I = env.ideals.at(st.ideal);
        if (!same_ring(I.ring(), R))
            throw ring_mismatch_error("ideal " + st.ideal + " does not live in " + st.ring);
        ReductionReport rr = st.kind == "spread" ? spread_and_core(*F, cl, I, env.budget)
                                                 : minimal_reductions(*F, cl, I, env.budget);
        CheckRecord r;
        r.check = "report/" + st.kind;
        r.ring = R->describe();
        r.closure = cl.name();
        r.status = st.kind == "spread" && !rr.spread ? "unknown" : "pass";
        for (std::size_t i = 0; i < rr.minimal_reductions.size(); ++i)
            r.witnesses.push_back("J = " + rr.minimal_reductions[i].to_string() +
                                  ", mu = " + std::to_string(rr.reduction_mu[i]));
        r.extra.emplace_back("ideal", I.to_string());
        r.extra.emplace_back("spread",
                             rr.spread ? std::to_string(*rr.spread) : "undefined");
        r.extra.emplace_back("core", rr.core.to_string());
        r.extra.emplace_back("nakayama", rr.nakayama);
        out.report.add(std::move(r));
        out.report.merge(rr.checks);
    }

    void operator()(const AssertStmt& st) const {
        const Ideal& I = env.ideals.at(st.ideal);
        const RingPtr& R = I.ring();
        ClosureOperation cl = instantiate(env, st.expr, R);
        CheckRecord r;
        r.check = "assert";
        r.ring = R->describe();
        r.closure = cl.name();
        r.extra.emplace_back("claim", stmt.text);
        if (st.form == AssertStmt::Form::equals) {
            Ideal lhs = cl.closure(I, env.budget);
            Ideal rhs = resolve_ideal_ref(env, st.rhs, R);
            r.status = lhs == rhs ? "pass" : "fail";
            if (lhs != rhs) {
                r.witnesses.push_back("computed " + lhs.to_string());
                r.witnesses.push_back("stated " + rhs.to_string());
            }
        } else {
            Polynomial f = parse_polynomial(R, st.poly);
            Verdict v = cl.membership(I, f, env.budget);
            bool want_in = st.form == AssertStmt::Form::member;
            if (v.is_unknown())
                r.status = "unknown";
            else
                r.status = (v.is_in() == want_in) ? "pass" : "fail";
            r.extra.emplace_back("verdict", v.to_string());
            if (r.status == "fail")
                r.witnesses.push_back(st.poly + (v.is_in() ? " is in " : " is outside ") +
                                      cl.name() + "(" + st.ideal + ")");
        }
        if (r.status == "fail") out.ok = false;
        if (r.status == "unknown" && env.strict_all) out.ok = false;
        out.report.add(std::move(r));
    }
};

}  // namespace

SessionResult run_session(const Session& s, const Budget& initial, bool strict_all) {
    Env env;
    env.budget = initial;
    env.budget.validate();
    env.strict_all = strict_all;
    SessionResult out;
    for (const Statement& st : s.statements) {
        auto abort_run = [&](const char* kind, const std::exception& e) {
            CheckRecord r;
            r.check = "error";
            r.status = "fail";
            r.witnesses.push_back(e.what());
            r.extra.emplace_back("command", st.text);
            r.extra.emplace_back("line", std::to_string(st.line));
            r.extra.emplace_back("kind", kind);
            out.report.add(std::move(r));
            out.ok = false;
        };
        try {
            std::visit(Executor{env, out, st}, st.node);
        } catch (const resource_error& e) {
            abort_run("resource", e);
            break;
        } catch (const ring_mismatch_error& e) {
            abort_run("ring-mismatch", e);
            break;
        } catch (const domain_error& e) {
            abort_run("domain", e);
            break;
        } catch (const parse_error& e) {
            abort_run("parse", e);
            break;
        }
    }
    return out;
}

}  // namespace idealclose
