#pragma once

#include "idealclose/ideal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idealclose {

// Coordinate vector over the standard monomial basis of a finite quotient
// ring.  Entries lie in [0, p).
using FpVec = std::vector<std::uint16_t>;

// F_p-subspace of F_p^n kept in reduced row echelon form.  The row list is a
// canonical label: two subspaces are equal iff their rows are equal.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::uint32_t p, std::size_t ambient);
    static Subspace span(std::uint32_t p, std::size_t ambient,
                         const std::vector<FpVec>& vecs);

    std::uint32_t characteristic() const { return p_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<FpVec>& rows() const { return rows_; }

    bool contains(const FpVec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // All p^dim member vectors, in a deterministic order.
    std::vector<FpVec> elements() const;

    // Canonical string label, usable as an ordered map key.
    std::string key() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.p_ == b.p_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    // Orders by dimension first, then by the canonical label.
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    std::uint32_t p_ = 2;
    std::size_t ambient_ = 0;
    std::vector<FpVec> rows_;

    void reduce_();
};

// A finite quotient ring F_p[x_1..x_n]/K materialized as an F_p-algebra: the
// standard monomial basis, the multiplication table on that basis, and the
// unit/local structure.  Requires K to contain a power of each variable.
class FiniteRing {
public:
    // dim_cap = 0 picks the per-characteristic default: basis size at most 8
    // over F_2, 5 over F_3, and the largest d with p^d <= 1024 otherwise.
    static FiniteRing build(const RingPtr& ring, std::size_t dim_cap = 0);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t characteristic() const { return p_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t size() const { return size_; }
    const std::vector<Monomial>& basis() const { return basis_; }

    FpVec zero_vec() const;
    FpVec one_vec() const;
    FpVec element(std::size_t index) const;
    std::size_t index_of(const FpVec& v) const;
    FpVec vec(const Polynomial& f) const;
    Polynomial poly(const FpVec& v) const;

    FpVec add(const FpVec& a, const FpVec& b) const;
    FpVec sub(const FpVec& a, const FpVec& b) const;
    FpVec scale(std::uint32_t c, const FpVec& a) const;
    FpVec mul(const FpVec& a, const FpVec& b) const;
    FpVec pow(const FpVec& a, std::uint64_t n) const;
    bool is_zero(const FpVec& a) const;

    std::optional<FpVec> inverse(const FpVec& a) const;
    bool is_unit(const FpVec& a) const;
    bool is_nilpotent(const FpVec& a) const;

    std::size_t unit_count() const { return unit_count_; }
    bool is_local() const { return local_; }
    // The set of non-units, valid only in the local case.
    const Subspace& maximal_ideal() const;

    // Subspace-level ideal arithmetic.  ideal_span is the ideal generated by
    // the given elements; the product/colon arguments must be ideals.
    Subspace ideal_span(const std::vector<FpVec>& gens) const;
    bool is_ideal(const Subspace& s) const;
    Subspace ideal_mul(const Subspace& a, const Subspace& b) const;
    Subspace ideal_colon(const Subspace& a, const Subspace& b) const;
    bool is_prime_ideal(const Subspace& s) const;
    Subspace nilradical() const;

    // Bridges to the Groebner-basis side.  Round trips are exact.
    Ideal to_ideal(const Subspace& s) const;
    Subspace to_subspace(const Ideal& I) const;

private:
    RingPtr ring_;
    std::uint32_t p_ = 2;
    std::size_t size_ = 1;
    std::vector<Monomial> basis_;
    // table_[i * dim + j] = coordinates of basis_[i] * basis_[j]
    std::vector<FpVec> table_;
    std::size_t unit_count_ = 0;
    bool local_ = false;
    Subspace max_ideal_;

    FiniteRing() = default;
};

// The complete ideal lattice, sorted by (dimension, canonical label); the
// first entry is (0) and the last is R.
struct IdealLattice {
    std::vector<Subspace> ideals;

    std::size_t size() const { return ideals.size(); }
    bool contains(const Subspace& s) const;
    std::size_t index_of(const Subspace& s) const;
};

// Breadth-first closure of {(0)} under sums with principal ideals.  Throws
// resource_error when the lattice exceeds cap.
IdealLattice enumerate_ideals(const FiniteRing& R, std::size_t cap = 100000);

// mu(I) = dim I - dim mI, the minimal generator count in the local case.
std::size_t minimal_generator_count(const FiniteRing& R, const Subspace& I);

}  // namespace idealclose
