#pragma once

// Table-driven small finite fields and the projective geometry of F_q^n:
// canonical point indices and RREF enumeration of subspaces.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spreadbound::galois {

using Element = std::uint8_t;
using Vector = std::vector<Element>;

/// Bit capacity of a point set (two machine words). Raising it needs a rebuild.
inline constexpr std::size_t kMaxPoints = 128;
/// Default limit on [n]_q for enumeration.
inline constexpr std::size_t kDefaultPointLimit = 127;

/// Fixed-width bitmask over point indices.
class PointSet {
public:
    static constexpr std::size_t kWords = kMaxPoints / 64;

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }
    bool disjoint(const PointSet& other) const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (words_[k] & other.words_[k]) return false;
        return true;
    }
    /// Lowest index below `limit` not in the set, or `limit` if there is none.
    std::size_t first_unset(std::size_t limit) const {
        for (std::size_t k = 0; k < kWords; ++k) {
            const std::uint64_t free = ~words_[k];
            if (free != 0) {
                const std::size_t i = k * 64 + static_cast<std::size_t>(std::countr_zero(free));
                return i < limit ? i : limit;
            }
        }
        return limit;
    }

    PointSet& operator|=(const PointSet& o) {
        for (std::size_t k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
        return *this;
    }
    PointSet& operator&=(const PointSet& o) {
        for (std::size_t k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
        return *this;
    }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend bool operator==(const PointSet&, const PointSet&) = default;

    /// All indices in [0, size).
    static PointSet full(std::size_t size) {
        PointSet s;
        for (std::size_t i = 0; i < size; ++i) s.set(i);
        return s;
    }
    PointSet complement(std::size_t size) const {
        PointSet s = full(size);
        for (std::size_t k = 0; k < kWords; ++k) s.words_[k] &= ~words_[k];
        return s;
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

/// F_q for q in {2,3,4,5,7,8,9}. Elements are 0..q-1; for q = p^e the element
/// sum_i a_i p^i stands for the polynomial sum_i a_i x^i modulo the reduction
/// polynomial. Construction verifies the field axioms exhaustively.
class Field {
public:
    static Field make(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    /// Low-to-high coefficients of the monic reduction polynomial (empty for prime fields).
    const std::vector<unsigned>& reduction_polynomial() const { return poly_; }

    Element add(Element a, Element b) const { return add_[a][b]; }
    Element mul(Element a, Element b) const { return mul_[a][b]; }
    Element neg(Element a) const { return neg_[a]; }
    /// Multiplicative inverse; `a` must be nonzero.
    Element inv(Element a) const { return inv_[a]; }

private:
    Field() = default;
    void verify() const;

    unsigned q_ = 0;
    unsigned p_ = 0;
    unsigned e_ = 0;
    std::vector<unsigned> poly_;
    std::array<std::array<Element, 9>, 9> add_{};
    std::array<std::array<Element, 9>, 9> mul_{};
    std::array<Element, 9> neg_{};
    std::array<Element, 9> inv_{};
};

/// Index of the point spanned by a nonzero vector: canonical representatives
/// (first nonzero coordinate 1) numbered in lexicographic order.
std::uint32_t point_index(const Field& field, std::span<const Element> v);

/// Canonical representative of a point index in F_q^n.
Vector point_vector(const Field& field, unsigned n, std::uint32_t index);

std::uint64_t point_count(unsigned q, unsigned n);

struct Subspace {
    unsigned dim = 0;
    std::vector<Vector> basis;  // reduced row echelon form, dim rows of length n
    PointSet points;
};

struct EnumerationLimits {
    std::size_t max_points = kDefaultPointLimit;
};

/// Every d-dimensional subspace of F_q^n, in order of pivot columns and then
/// free entries. Throws CapacityError when [n]_q exceeds the limit.
std::vector<Subspace> enumerate_subspaces(const Field& field, unsigned n, unsigned d,
                                          EnumerationLimits limits = {});

/// The [n]_q hyperplanes of F_q^n.
std::vector<Subspace> hyperplanes(const Field& field, unsigned n, EnumerationLimits limits = {});

/// Subspace spanned by the given rows (reduced to RREF; rank may be lower).
Subspace span_of(const Field& field, unsigned n, std::vector<Vector> rows);

} // namespace spreadbound::galois
