#pragma once

#include <map>
#include <optional>
#include <string>

#include "gwpt/lattice.hpp"
#include "gwpt/series.hpp"

namespace gwpt {

// Finite truncation of an element of Q((x))[[NE]]: one series per effective class of
// degree <= degree_bound. Absent classes carry the exact zero series.
class GradedSeries {
public:
    using Entries = std::map<EffectiveClass, TruncatedSeries>;

    GradedSeries(CurveClassLattice lattice, std::int64_t degree_bound, Variable var);
    // 1 * v^0.
    static GradedSeries unit(CurveClassLattice lattice, std::int64_t degree_bound, Variable var);

    const CurveClassLattice& lattice() const { return lattice_; }
    std::int64_t degree_bound() const { return bound_; }
    Variable variable() const { return var_; }
    const Entries& entries() const { return entries_; }

    // Stored series, or the exact zero.
    TruncatedSeries at(const EffectiveClass& c) const;
    bool contains(const EffectiveClass& c) const { return entries_.count(c) != 0; }
    // Replaces the entry; an exact zero removes it. Throws on a class above the bound.
    void set(const EffectiveClass& c, TruncatedSeries s);
    void add_to(const EffectiveClass& c, const TruncatedSeries& s);

    // Same entries below a smaller bound.
    GradedSeries truncated(std::int64_t degree_bound) const;

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

    std::string str() const;

private:
    CurveClassLattice lattice_;
    std::int64_t bound_;
    Variable var_;
    Entries entries_;
};

// Convolution over splittings beta = beta' + beta''; bound is the smaller of the two.
GradedSeries gmul(const GradedSeries& a, const GradedSeries& b);
// Two-sided inverse; needs an invertible degree-0 entry. `order` caps the precision of the
// inverse of the degree-0 entry (required when it is an exact non-monomial).
GradedSeries ginvert(const GradedSeries& a, std::optional<HalfInteger> order = std::nullopt);

struct PushforwardOptions {
    // Requested bound on the target; must not exceed what the source bound supports
    // unless assume_vanishing_beyond_bound is set.
    std::optional<std::int64_t> target_bound;
    // Treat source classes above the source bound (and fibers along killed generators)
    // as contributing zero. This is a claim about the data, not something checked.
    bool assume_vanishing_beyond_bound = false;
};

// Sums entries along the fibers of a pushforward or inclusion map.
GradedSeries pushforward_classes(const GradedSeries& a, const LatticeMap& f, const CurveClassLattice& target,
                                 const PushforwardOptions& options = {});

} // namespace gwpt
