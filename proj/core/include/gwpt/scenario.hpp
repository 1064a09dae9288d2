#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwpt/degeneration.hpp"
#include "gwpt/ktilde.hpp"
#include "gwpt/transition.hpp"

namespace gwpt {

// One entry of the "checks" list. Which fields matter depends on the kind:
//   local-correspondence  degree
//   x-reduction, main-theorem            classes in X (empty: all up to the bound), insertions
//   y-reduction, key-equality            classes in Y, insertions
//   ratio                                side (empty: both), insertions
//   trivial-splittings                   degeneration ("x_side" / "y_side" / "main"), classes in its total space
//   assemble                             degeneration, side, one class, expect
//   ktilde-valid, bar-identity (degree = max length), bar-diagonal (degree = max |alpha|)
struct CheckSpec {
    std::string name;
    std::string kind;
    std::vector<EffectiveClass> classes;
    std::string insertions;
    std::optional<Side> side;
    std::string degeneration;
    int degree = 0;
    std::optional<TruncatedSeries> expect;
};

struct KtildeData {
    KtildeTable table;
    ChernSubstitution chern;
};

struct Scenario {
    std::string name;
    Orders orders;
    std::optional<ConifoldTransition> transition;
    std::optional<DegenerationScenario> degeneration;
    std::map<std::string, InsertionList> insertion_sets;
    std::optional<KtildeData> ktilde;
    std::vector<CheckSpec> checks;

    // Throws ScenarioError on an unknown name; "" is the empty list.
    const InsertionList& insertion_set(const std::string& name) const;
    // Pushes the orders into every degeneration.
    Scenario with_orders(const Orders& o) const;
    const DegenerationScenario& degeneration_named(const std::string& which) const;
};

struct Diagnostic {
    std::string location;
    std::string message;
};

// Throws ScenarioError("<json path>: <message>") on malformed input.
Scenario parse_scenario(std::string_view text);
// Throws IoError when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

// Every section is checked independently; within a section the first violation is reported.
std::vector<Diagnostic> validate_scenario(const Scenario& s);

// Canonical JSON text (fixed key order, two-space indent, trailing newline).
std::string dump_scenario(const Scenario& s);

std::uint64_t fnv1a64(std::string_view data);
// 16 lowercase hex digits.
std::string hex64(std::uint64_t v);

// Shipped fixtures as scenario documents.
Scenario conifold_toy_scenario(const Orders& o = {64, 10, 4});
Scenario synthetic_degeneration_scenario(const Orders& o, std::uint32_t seed);
Scenario synthetic_ktilde_scenario(int max_size, std::uint32_t seed);

} // namespace gwpt
