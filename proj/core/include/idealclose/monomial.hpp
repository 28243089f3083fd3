/**
 * @file monomial.hpp
 * Exponent vectors and monomial orders (lex, grevlex, block elimination).
 */
#ifndef IDEALCLOSE_MONOMIAL_HPP
#define IDEALCLOSE_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "idealclose/numeric.hpp"

namespace idealclose {

/// A monomial is its exponent vector; the ring fixes the variable count.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }

    std::uint64_t degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }

    /// this / o; requires o.divides(*this).
    Monomial divide_by(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
        return r;
    }

    Monomial pow(std::uint32_t n) const {
        Monomial r(*this);
        for (auto& e : r.exps) e *= n;
        return r;
    }

    /// Exponents clamped to 0/1; generates the radical of a monomial ideal.
    Monomial squarefree_part() const {
        Monomial r(*this);
        for (auto& e : r.exps) e = e > 0 ? 1 : 0;
        return r;
    }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

struct MonomialOrder {
    enum class Kind { lex, grevlex, block };
    Kind kind = Kind::grevlex;
    /// block order only: variables [0, split) form the eliminated block,
    /// compared grevlex first; ties fall through to grevlex on the rest.
    std::size_t split = 0;

    static MonomialOrder lex_order() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex_order() { return {Kind::grevlex, 0}; }
    static MonomialOrder block_order(std::size_t split) { return {Kind::block, split}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && split == o.split; }
};

namespace detail {

inline int cmp_lex(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

inline int cmp_grevlex(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

/// Three-way compare: > 0 iff a > b in the order.
inline int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    const std::size_t n = a.exps.size();
    const std::uint32_t* pa = a.exps.data();
    const std::uint32_t* pb = b.exps.data();
    switch (ord.kind) {
        case MonomialOrder::Kind::lex:
            return detail::cmp_lex(pa, pb, n);
        case MonomialOrder::Kind::grevlex:
            return detail::cmp_grevlex(pa, pb, n);
        case MonomialOrder::Kind::block: {
            int c = detail::cmp_grevlex(pa, pb, ord.split);
            if (c != 0) return c;
            return detail::cmp_grevlex(pa + ord.split, pb + ord.split, n - ord.split);
        }
    }
    return 0;
}

}  // namespace idealclose

#endif
