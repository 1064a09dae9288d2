#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gwpt/lattice.hpp"
#include "gwpt/partitions.hpp"
#include "gwpt/series.hpp"

namespace gwpt {

enum class Side { gw, pt };

std::string to_string(Side s);
Variable variable_of(Side s);

// tau_k(gamma). Degrees are real; only even classes are accepted.
struct Insertion {
    int descendant = 0;
    std::string class_label;
    int class_degree = 0;
    // Components on which the class restricts to zero.
    std::set<std::string> vanishes_on;

    int complex_degree() const { return class_degree / 2; }
    bool is_unit() const { return descendant == 0 && class_degree == 0; }
    // Throws ScenarioError on an odd degree or a descendant of a degree-0 class.
    void validate() const;
    // "tau_1(H)"
    std::string str() const;

    friend bool operator==(const Insertion&, const Insertion&) = default;
};

using InsertionList = std::vector<Insertion>;

// Canonical multiset key, e.g. "tau_0(pt) tau_1(H)"; empty for no insertions.
std::string insertion_key(const InsertionList& ins);

struct TableKey {
    std::string component;
    EffectiveClass cls;
    std::string insertions;
    // One weighted partition per divisor incident to the component.
    std::vector<WeightedPartition> boundary;

    friend auto operator<=>(const TableKey&, const TableKey&) = default;
    friend bool operator==(const TableKey&, const TableKey&) = default;

    std::string str() const;
};

struct RelativeInvariantTable {
    Side side = Side::gw;
    std::map<TableKey, TruncatedSeries> entries;
};

struct TableSet {
    std::shared_ptr<const RelativeInvariantTable> gw;
    std::shared_ptr<const RelativeInvariantTable> pt;

    const RelativeInvariantTable* get(Side s) const { return s == Side::gw ? gw.get() : pt.get(); }
};

struct ComponentGeometry {
    std::string name;
    CurveClassLattice lattice;
    std::optional<IntVector> c1;
    // Into the total-space lattice.
    LatticeMap inclusion;
    // Apply the virtual dimension count of relative invariants on this component.
    bool dimension_filter = false;
    // Entries for multiples of this generator with empty boundary come from the local curve series.
    std::optional<std::size_t> local_curve_generator;
};

// D_i = M_0 cap M_i, for i >= 1.
struct DivisorData {
    std::string name;
    std::size_t component = 1;
    CohBasis basis;
    IntVector pairing_main;
    IntVector pairing_side;
};

// The general fiber M and its pushforward into the total space.
struct FiberData {
    CurveClassLattice lattice;
    std::optional<IntVector> c1;
    LatticeMap inclusion;
};

struct Orders {
    int q_order = 16;
    int u_order = 8;
    int degree_bound = 3;
};

struct DegenerationScenario {
    std::string name;
    CurveClassLattice total;
    // components[0] is M_0; divisors[i - 1] joins it with components[i].
    std::vector<ComponentGeometry> components;
    std::vector<DivisorData> divisors;
    std::optional<FiberData> fiber;
    TableSet tables;
    InsertionList insertions;
    Orders orders;

    // Throws ScenarioError / LatticeError on the first violated invariant.
    void validate() const;
    std::size_t component_index(const std::string& name) const;
    // Divisor indices incident to component j (all of them for M_0).
    std::vector<std::size_t> incident_divisors(std::size_t j) const;
};

struct Splitting {
    std::vector<EffectiveClass> classes;
    // |eta_i| = beta_0 . D_i.
    std::vector<int> boundary_sizes;

    friend bool operator==(const Splitting&, const Splitting&) = default;
    std::string str() const;
};

struct FilterLogEntry {
    Splitting splitting;
    bool kept = false;
    std::string reason;
};

struct SplittingResult {
    std::vector<Splitting> kept;
    std::vector<FilterLogEntry> log;
};

// Splittings of total_class, filtered by the matching condition and (per opted-in
// component) by the virtual dimension count for the given side and insertions.
SplittingResult enumerate_splittings(const DegenerationScenario& s, const EffectiveClass& total_class, Side side,
                                     const InsertionList& ins);
SplittingResult enumerate_splittings(const DegenerationScenario& s, const EffectiveClass& total_class);

// All (k+1)^r maps from insertions to components, where k+1 = component_names.size().
// Placing an insertion on a component where it vanishes is allowed only when that
// component receives no curve class (receives_class empty means every component does).
std::vector<std::vector<std::size_t>> distribute_insertions(const InsertionList& ins,
                                                            const std::vector<std::string>& component_names,
                                                            const std::vector<bool>& receives_class = {});

// True iff the insertion and boundary degrees match the virtual dimension on this component.
bool dimension_matches(Side side, const ComponentGeometry& comp, const EffectiveClass& cls, const InsertionList& ins,
                       const std::vector<std::pair<const WeightedPartition*, const CohBasis*>>& boundary);

// Table lookup with the class-0 conventions: 1 without insertions, 0 with insertions.
TruncatedSeries lookup_relative(const DegenerationScenario& s, Side side, const TableKey& key);

struct AssemblyResult {
    TruncatedSeries series;
    SplittingResult splittings;
    std::size_t terms = 0;
};

AssemblyResult assemble_absolute(const DegenerationScenario& s, Side side, const EffectiveClass& total_class,
                                 const InsertionList& ins);
TruncatedSeries assemble_absolute_gw(const DegenerationScenario& s, const EffectiveClass& total_class);
TruncatedSeries assemble_absolute_pt(const DegenerationScenario& s, const EffectiveClass& total_class);

} // namespace gwpt
