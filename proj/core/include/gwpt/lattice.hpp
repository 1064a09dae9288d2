#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gwpt {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

// A point of the free monoid N^r, in generator coordinates.
class EffectiveClass {
public:
    EffectiveClass() = default;
    // Throws LatticeError on a negative coordinate.
    explicit EffectiveClass(IntVector coords);
    static EffectiveClass zero(std::size_t rank) { return EffectiveClass(IntVector(rank, 0)); }
    static EffectiveClass generator(std::size_t rank, std::size_t i);

    const IntVector& coords() const { return coords_; }
    std::size_t rank() const { return coords_.size(); }
    bool is_zero() const;
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    EffectiveClass operator+(const EffectiveClass& o) const;
    // Componentwise difference if it is still effective.
    std::optional<EffectiveClass> minus(const EffectiveClass& o) const;

    friend auto operator<=>(const EffectiveClass&, const EffectiveClass&) = default;
    friend bool operator==(const EffectiveClass&, const EffectiveClass&) = default;

    // "(1,0,2)"
    std::string str() const;

private:
    IntVector coords_;
};

// Effective cone N^r with a strictly positive degree functional.
class CurveClassLattice {
public:
    CurveClassLattice() = default;
    // Throws LatticeError unless every weight is >= 1.
    explicit CurveClassLattice(IntVector degree_weights);

    std::size_t rank() const { return weights_.size(); }
    const IntVector& degree_weights() const { return weights_; }
    std::int64_t degree(const EffectiveClass& c) const;
    bool owns(const EffectiveClass& c) const { return c.rank() == rank(); }

    // Every class of degree <= bound, ordered by degree and then lexicographically.
    std::vector<EffectiveClass> classes_up_to(std::int64_t bound) const;

    friend bool operator==(const CurveClassLattice&, const CurveClassLattice&) = default;

private:
    IntVector weights_;
};

// Every class c of N^rank with sum_i weights[i] * c_i <= bound; weights must be positive.
std::vector<EffectiveClass> classes_with_weighted_degree(const IntVector& weights, std::int64_t bound);

enum class MapKind { pushforward, gysin, inclusion };

std::string to_string(MapKind k);

// Integer matrix between lattices, target_rank rows by source_rank columns.
// pushforward: surjective over Q, non-negative entries (psi_*).
// gysin: injective; `image_functionals` are rows on the target that cut out the image (phi^!).
// inclusion: non-negative entries, no rank condition (iota_* into a total space).
class LatticeMap {
public:
    LatticeMap() = default;
    // Throws LatticeError when the matrix violates the contract of its kind.
    LatticeMap(MapKind kind, std::size_t source_rank, std::size_t target_rank, IntMatrix matrix,
               IntMatrix image_functionals = {});

    MapKind kind() const { return kind_; }
    std::size_t source_rank() const { return source_rank_; }
    std::size_t target_rank() const { return target_rank_; }
    const IntMatrix& matrix() const { return matrix_; }
    const IntMatrix& image_functionals() const { return functionals_; }

    IntVector apply(const IntVector& v) const;
    IntVector apply(const EffectiveClass& c) const { return apply(c.coords()); }
    // Image as an effective class, or nullopt if some coordinate is negative.
    std::optional<EffectiveClass> apply_effective(const EffectiveClass& c) const;
    IntVector column(std::size_t j) const;

    // Matrix product (*this) o inner.
    IntMatrix compose(const LatticeMap& inner) const;

private:
    MapKind kind_ = MapKind::inclusion;
    std::size_t source_rank_ = 0;
    std::size_t target_rank_ = 0;
    IntMatrix matrix_;
    IntMatrix functionals_;
};

// Unique integral effective preimage under an injective map, if there is one.
std::optional<EffectiveClass> injective_preimage(const EffectiveClass& c, const LatticeMap& f);

// Unique preimage under a gysin map, when c is cut out by the image functionals and
// the rational preimage is integral and effective.
std::optional<EffectiveClass> gysin_preimage(const EffectiveClass& c, const LatticeMap& f);

// Linear functional (row vector) evaluated on a class.
std::int64_t pair(const IntVector& functional, const IntVector& v);
inline std::int64_t pair(const IntVector& functional, const EffectiveClass& c) { return pair(functional, c.coords()); }

} // namespace gwpt
