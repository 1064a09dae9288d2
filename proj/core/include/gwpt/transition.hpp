#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwpt/degeneration.hpp"
#include "gwpt/graded_series.hpp"
#include "gwpt/rational_function.hpp"
#include "gwpt/report.hpp"

namespace gwpt {

// X -> Y conifold transition with its two degenerations: the one of X to
// Ytilde cup Q_1..Q_k and the one of Y to Ytilde cup Etilde_1..Etilde_k.
struct ConifoldTransition {
    std::string name;
    CurveClassLattice y_lattice;
    CurveClassLattice x_lattice;
    CurveClassLattice ytilde_lattice;
    LatticeMap psi;
    LatticeMap phi;
    IntVector c1_y;
    IntVector c1_x;
    IntVector c1_ytilde;
    // Y-classes of the exceptional curves C_1..C_k.
    std::vector<EffectiveClass> exceptional;
    // Fibers are X and Y respectively; components[0] of both is Ytilde.
    DegenerationScenario x_side;
    DegenerationScenario y_side;

    std::size_t k() const { return exceptional.size(); }
    const Orders& orders() const { return x_side.orders; }
    // Throws ScenarioError / LatticeError naming the violated invariant.
    void validate() const;
    // Same transition with different orders on both sides.
    ConifoldTransition with_orders(const Orders& o) const;
    // Same transition reading every relative invariant from `t`.
    ConifoldTransition with_tables(const TableSet& t) const;
};

// The Y-classes with psi_* beta_Y = beta whose phi^! image is effective.
std::vector<EffectiveClass> psi_fiber(const ConifoldTransition& t, const EffectiveClass& beta);

struct TransitionReport {
    std::vector<CheckRecord> records;
    Verdict verdict = Verdict::vacuous;

    void add(CheckRecord r);
    void add(const TransitionReport& r);
};

// Ytilde/E table entry at phi^! beta_Y with empty boundary; zero when phi^! beta_Y is not effective.
TruncatedSeries ytilde_series(const ConifoldTransition& t, Side side, const EffectiveClass& beta_y,
                              const InsertionList& ins);

TransitionReport simplify_conifold_X(const ConifoldTransition& t, const EffectiveClass& beta, const InsertionList& ins);
TransitionReport simplify_conifold_Y(const ConifoldTransition& t, const EffectiveClass& beta_y,
                                     const InsertionList& ins);

GradedSeries compute_exceptional_series(const ConifoldTransition& t, Side side, std::int64_t degree_bound);
GradedSeries compute_ratio(const GradedSeries& numerator, const ConifoldTransition& t, Side side);

// Z(Y)_{beta_Y} assembled from the Y-side degeneration for every class up to the bound.
GradedSeries assemble_y_series(const ConifoldTransition& t, Side side, const InsertionList& ins,
                               std::int64_t degree_bound);

// Numerator / exceptional series against the Ytilde/E tables, and its pushforward to X
// against the directly assembled X-side series.
TransitionReport check_ratio(const ConifoldTransition& t, Side side, const InsertionList& ins);

// (-q)^{-c/2} Z_PT(Ytilde/E)  versus  (-iu)^{c + l(eta) - |eta|} Z'_GW(Ytilde/E), c = c1 on phi^! beta_Y.
CheckRecord check_key_equality(const ConifoldTransition& t, const EffectiveClass& beta_y, const InsertionList& ins,
                               const std::vector<WeightedPartition>& boundary = {});

struct StringReduction {
    InsertionList insertions;
    // PT side with a tau_0(1): the invariant vanishes.
    bool zero = false;
    // GW side: one tau_0(1) was removed.
    bool reduced = false;
    std::string note;
};

StringReduction apply_string_equation(Side side, const InsertionList& ins);

// Per-class key equalities, the X-side reduction, prefactor constancy, the X-side
// correspondence and a Pade rationality probe of the X-side PT series.
TransitionReport run_main_theorem(const ConifoldTransition& t, const EffectiveClass& beta, const InsertionList& ins);

// PT side mapped to u: substitute_q of a Pade fit times e^{-icu/2}; nullopt when no fit is found.
std::optional<TruncatedSeries> pt_to_u(const TruncatedSeries& pt, std::int64_t c, int u_order, int slack,
                                       std::optional<RationalFunction>* fit = nullptr);

} // namespace gwpt
