#pragma once

#include "idealclose/ideal.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idealclose {

enum class UnknownReason { budget_exhausted, not_implemented };

// Tri-state answer for membership questions.  In and Out are exact claims; a
// bounded search that runs out of room must answer unknown, never out.
class Verdict {
public:
    static Verdict in() { return Verdict(State::in, UnknownReason::budget_exhausted); }
    static Verdict out() { return Verdict(State::out, UnknownReason::budget_exhausted); }
    static Verdict unknown(UnknownReason r) { return Verdict(State::unknown, r); }

    bool is_in() const { return state_ == State::in; }
    bool is_out() const { return state_ == State::out; }
    bool is_unknown() const { return state_ == State::unknown; }
    bool decided() const { return state_ != State::unknown; }
    UnknownReason reason() const;

    std::string to_string() const;

    friend bool operator==(const Verdict& a, const Verdict& b) {
        return a.state_ == b.state_ &&
               (a.state_ != State::unknown || a.reason_ == b.reason_);
    }
    friend bool operator!=(const Verdict& a, const Verdict& b) { return !(a == b); }

private:
    enum class State { in, out, unknown };
    Verdict(State s, UnknownReason r) : state_(s), reason_(r) {}
    State state_;
    UnknownReason reason_;
};

// Caps for the bounded searches.  All fields must stay positive.
struct Budget {
    std::uint32_t e_max = 6;        // Frobenius stage bound
    std::uint32_t n_max = 8;        // power search bound
    std::uint32_t word_max = 4;     // product word length bound
    std::uint64_t mono_max = 200000;  // enumeration work bound

    void validate() const;
    std::string to_string() const;
};

// A closure operation packaged as its engines.  The membership engine may be
// bounded (tri-state); the closure engine, when present, must be exact and
// must only throw resource_error when a budget runs out.
class ClosureOperation {
public:
    using MembershipFn =
        std::function<Verdict(const Ideal&, const Polynomial&, const Budget&)>;
    using ClosureFn = std::function<Ideal(const Ideal&, const Budget&)>;

    ClosureOperation(std::string name, MembershipFn membership, ClosureFn closure,
                     bool semi_prime_claim = false, bool finite_type_claim = false);

    const std::string& name() const { return name_; }
    bool has_closure_engine() const { return static_cast<bool>(closure_); }
    bool claims_semi_prime() const { return claims_semi_prime_; }
    bool claims_finite_type() const { return claims_finite_type_; }

    // Falls back on the closure engine when no membership engine was given.
    Verdict membership(const Ideal& I, const Polynomial& f, const Budget& b = {}) const;
    Ideal closure(const Ideal& I, const Budget& b = {}) const;

private:
    std::string name_;
    MembershipFn membership_;
    ClosureFn closure_;
    bool claims_semi_prime_;
    bool claims_finite_type_;
};

// One verified statement: status is "pass", "fail", or "unknown", and every
// failure carries human-readable witnesses.
struct CheckRecord {
    std::string check;
    std::string ring;
    std::string closure;
    std::string status;
    std::vector<std::string> witnesses;
    std::vector<std::pair<std::string, std::string>> extra;
};

struct CheckReport {
    std::vector<CheckRecord> records;

    bool all_passed() const;
    bool has_failure() const;
    bool has_unknown() const;
    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void merge(const CheckReport& other);
    const CheckRecord* find(const std::string& check) const;
};

// Axioms of a closure operation, verified on a family of ideals in one ring:
// extension, idempotence, and order-preservation over all nested pairs.  Also
// cross-checks the membership engine against the closure engine.
CheckReport check_axioms(const ClosureOperation& cl, const std::vector<Ideal>& family,
                         const Budget& b = {});

// Consequences of the axioms, relative to the family: intersections of
// closed ideals are closed, the closed hull description of the closure, and
// the sum identity (sum of closures and sum of ideals close alike).
CheckReport check_basics(const ClosureOperation& cl, const std::vector<Ideal>& family,
                         const Budget& b = {});

// I * J^cl contained in (I*J)^cl, for each given ordered pair.
CheckReport semiprime_check(const ClosureOperation& cl,
                            const std::vector<std::pair<Ideal, Ideal>>& pairs,
                            const Budget& b = {});
// Convenience: all ordered pairs drawn from a family.
CheckReport semiprime_check(const ClosureOperation& cl, const std::vector<Ideal>& family,
                            const Budget& b = {});

// (xJ)^cl = x * J^cl for a non-zerodivisor x; throws domain_error when x is
// a zerodivisor.
CheckReport star_check(const ClosureOperation& cl, const Ideal& J, const Polynomial& x,
                       const Budget& b = {});

// I^cl = ((xI)^cl : x) for a non-zerodivisor x.
CheckReport hash_property_check(const ClosureOperation& cl, const Ideal& I,
                                const Polynomial& x, const Budget& b = {});

enum class CompareOutcome { equal, less, greater, incomparable };

struct CompareResult {
    CompareOutcome outcome;
    std::vector<std::string> witnesses;
    std::string to_string() const;
};

// Pointwise order of two closures, decided relative to the family.  "less"
// means the first closure produces the smaller ideals.
CompareResult compare(const ClosureOperation& a, const ClosureOperation& c,
                      const std::vector<Ideal>& family, const Budget& b = {});

// ---------------------------------------------------------------------------
// Degenerate instances and combinators.

// I maps to I.
ClosureOperation identity_closure();
// I maps to R.
ClosureOperation indiscrete_closure();

// I maps to (IK : K).  Taking K = m gives the basically full closure.
ClosureOperation construct_from_module(const Ideal& K);
// The module R/a instead of an ideal: I maps to I + a.
ClosureOperation construct_from_module_quotient(const Ideal& a);

// I maps to the preimage of (phi(I)S)^d.  The closure engine exists only
// when phi is a quotient surjection; otherwise the operation answers
// membership queries only.
ClosureOperation construct_contraction(const RingMap& phi, ClosureOperation d);

// I maps to the intersection of the constituents' closures.
ClosureOperation construct_intersection(std::vector<ClosureOperation> cls);

// I maps to the union of the constituents' closures.  The caller asserts the
// family is directed; each evaluation verifies directedness on its instance
// and throws domain_error with a witness when it fails, since the union of a
// non-directed family need not be an ideal.
ClosureOperation construct_directed_union(std::vector<ClosureOperation> cls);

// Iterates an extensive operation to its fixpoint.  Each step verifies
// extension; iteration past the internal cap throws resource_error.
ClosureOperation idempotent_hull(ClosureOperation d);

// Finite-type restriction.  Every ideal here is finitely generated, so the
// operation itself is unchanged; only the declared flag changes.
ClosureOperation finite_type_cf(ClosureOperation cl);

}  // namespace idealclose
