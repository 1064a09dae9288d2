#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gwpt/gaussian.hpp"

namespace gwpt {

// Weakly decreasing list of positive parts.
class IntPartition {
public:
    IntPartition() = default;
    // Sorts the parts; throws ScenarioError on a non-positive part.
    explicit IntPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // True when every part is 1.
    bool all_ones() const;

    friend auto operator<=>(const IntPartition&, const IntPartition&) = default;
    friend bool operator==(const IntPartition&, const IntPartition&) = default;

    // "(2,1,1)"
    std::string str() const;

private:
    std::vector<int> parts_;
};

// Partitions of d, largest parts first: (d), (d-1,1), ...
std::vector<IntPartition> enumerate_partitions(int d);

// Blocks of {1..n}; each block increasing, blocks ordered by their smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

std::vector<SetPartition> enumerate_set_partitions(int n);

// Self-dual basis of the even cohomology of a divisor.
struct CohBasis {
    std::vector<std::string> labels;
    // Real degrees, all even.
    std::vector<int> degrees;
    std::vector<std::vector<Rational>> pairing;
    // j -> index of the dual element.
    std::vector<std::size_t> duality;

    std::size_t size() const { return labels.size(); }
    int complex_degree(std::size_t j) const { return degrees.at(j) / 2; }
    // Throws ScenarioError naming the first violated invariant.
    void validate() const;
    // Throws ScenarioError on an unknown label.
    std::size_t index_of(const std::string& label) const;
};

struct WeightedPart {
    int part;
    std::size_t index;
    friend auto operator<=>(const WeightedPart&, const WeightedPart&) = default;
    friend bool operator==(const WeightedPart&, const WeightedPart&) = default;
};

// Multiset of (part, basis index), stored with parts descending and then indices ascending.
class WeightedPartition {
public:
    WeightedPartition() = default;
    explicit WeightedPartition(std::vector<WeightedPart> pairs);

    const std::vector<WeightedPart>& pairs() const { return pairs_; }
    int size() const;
    int length() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return pairs_.empty(); }
    IntPartition shape() const;
    // Complex degree of the Nakajima class C_eta: |eta| - l(eta) + sum deg delta_j.
    int nakajima_degree(const CohBasis& b) const;

    friend auto operator<=>(const WeightedPartition& a, const WeightedPartition& b)
    {
        return std::lexicographical_compare_three_way(a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(),
                                                      b.pairs_.end(), [](const auto& x, const auto& y) {
                                                          if (x.part != y.part) {
                                                              return y.part <=> x.part;
                                                          }
                                                          return x.index <=> y.index;
                                                      });
    }
    friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;

    // "{(2,pt),(1,1)}" with basis labels, "{(2,#1),(1,#0)}" without.
    std::string str() const;
    std::string str(const CohBasis& b) const;

private:
    std::vector<WeightedPart> pairs_;
};

std::int64_t aut_order(const WeightedPartition& eta);
std::int64_t z_factor(const WeightedPartition& eta);
WeightedPartition dual_partition(const WeightedPartition& eta, const CohBasis& b);
// <C_eta, C_nu> on Hilb(D, d); throws ScenarioError on a size mismatch.
Rational nakajima_pairing(const WeightedPartition& eta, const WeightedPartition& nu, const CohBasis& b);
// All weighted partitions of size d over a basis of the given size, in canonical order.
std::vector<WeightedPartition> enumerate_weighted_partitions(int d, std::size_t basis_size);

} // namespace gwpt
