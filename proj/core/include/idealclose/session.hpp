#pragma once

#include "idealclose/closure.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace idealclose {

// Parse failure with a 1-based source position.
class session_parse_error : public std::runtime_error {
public:
    session_parse_error(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Closure expression tree.  Heads with subexpressions use args; sat, delta
// and modclosure keep their ideal references as raw text (a declared name or
// an inline "(f, g)" generator list) resolved against the ring the
// expression is eventually bound to.  head == "ref" names a declared closure.
struct ClosureExpr {
    std::string head;
    std::vector<ClosureExpr> args;
    std::vector<std::string> ideal_args;
    std::optional<std::uint32_t> number;  // frob stage cap
    std::string name;                     // ref target or contract's map

    std::string to_string() const;
};

struct RingStmt {
    std::string name;
    std::uint32_t characteristic = 0;
    std::vector<std::string> vars;
    std::vector<std::string> relations;
};

struct IdealStmt {
    std::string name;
    std::vector<std::string> gens;
    std::string ring;
};

struct MapStmt {
    std::string name;
    std::string source;
    std::string target;
    std::vector<std::pair<std::string, std::string>> images;  // var -> poly text
};

struct ClosureStmt {
    std::string name;
    ClosureExpr expr;
};

struct BudgetStmt {
    std::vector<std::pair<std::string, std::uint64_t>> settings;
};

struct CheckStmt {
    std::string kind;  // axioms | basics | semiprime | nakayama | persistence
    ClosureExpr expr;
    std::string map;           // persistence only
    bool lattice_scope = true;
    std::string lattice_ring;
    std::vector<std::string> family;  // ideal names, family scope
    bool strict = false;
    bool expect_violation = false;
};

struct ComputeStmt {
    ClosureExpr expr;
    std::string ideal;
};

struct ReportStmt {
    std::string kind;  // spread | reductions | census
    ClosureExpr expr;
    std::string ideal;  // empty for census
    std::string ring;
};

struct AssertStmt {
    enum class Form { member, not_member, equals };
    Form form = Form::equals;
    std::string poly;  // membership forms
    ClosureExpr expr;
    std::string ideal;
    std::string rhs;  // equality form: ideal name or inline "(f, g)"
};

struct Statement {
    std::size_t line = 0;
    std::string text;  // trimmed source line
    std::variant<RingStmt, IdealStmt, MapStmt, ClosureStmt, BudgetStmt, CheckStmt,
                 ComputeStmt, ReportStmt, AssertStmt>
        node;
};

struct Session {
    std::vector<Statement> statements;
};

// Line-oriented parse; "#" starts a comment.  Name resolution is checked
// here: names are unique per kind and every reference must already be
// declared.  Throws session_parse_error.
Session parse_session(const std::string& text);

// Canonical text form; parsing it again yields an equivalent session.
std::string print_session(const Session& s);

struct SessionResult {
    CheckReport report;
    bool ok = true;
};

// Executes the statements in order against the given starting budget.
// A failed check flips ok unless the check expects a violation, in which
// case the violation must occur; unknown verdicts flip ok only for strict
// checks (or everywhere under strict_all).  Resource exhaustion and
// ill-formed commands abort the run with an "error" record naming the
// offending statement.
SessionResult run_session(const Session& s, const Budget& initial = {},
                          bool strict_all = false);

}  // namespace idealclose
