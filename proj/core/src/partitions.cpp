#include "gwpt/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gwpt/error.hpp"

namespace gwpt {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 1) {
            throw ScenarioError("partition parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool IntPartition::all_ones() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string IntPartition::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<IntPartition> enumerate_partitions(int d)
{
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (d >= 1) {
        rec(d, d);
    }
    return out;
}

std::vector<SetPartition> enumerate_set_partitions(int n)
{
    // restricted growth strings
    std::vector<SetPartition> out;
    std::vector<int> label(static_cast<std::size_t>(std::max(n, 0)), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            SetPartition p;
            p.blocks.resize(static_cast<std::size_t>(blocks));
            for (int j = 0; j < n; ++j) {
                p.blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(j + 1);
            }
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

void CohBasis::validate() const
{
    const std::size_t n = labels.size();
    if (n == 0) {
        throw ScenarioError("cohomology basis is empty");
    }
    if (degrees.size() != n || duality.size() != n || pairing.size() != n) {
        throw ScenarioError("cohomology basis: labels, degrees, pairing and duality must have equal length");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (degrees[j] < 0 || degrees[j] % 2 != 0) {
            throw ScenarioError("cohomology basis element '" + labels[j] + "' has degree " +
                                std::to_string(degrees[j]) +
                                "; only even classes are supported (odd classes need signs the engine does not fix)");
        }
        if (pairing[j].size() != n) {
            throw ScenarioError("cohomology basis pairing must be square");
        }
        if (duality[j] >= n || duality[duality[j]] != j) {
            throw ScenarioError("cohomology basis duality must be an involution");
        }
        for (std::size_t l = 0; l < n; ++l) {
            const bool dual = (l == duality[j]);
            if (dual && is_zero(pairing[j][l])) {
                throw ScenarioError("pairing of '" + labels[j] + "' with its dual vanishes");
            }
            if (!dual && !is_zero(pairing[j][l])) {
                throw ScenarioError("basis is not self dual: '" + labels[j] + "' pairs with '" + labels[l] + "'");
            }
            if (pairing[j][l] != pairing[l][j]) {
                throw ScenarioError("pairing on even classes must be symmetric");
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
            if (labels[j] == labels[l]) {
                throw ScenarioError("duplicate basis label '" + labels[j] + "'");
            }
        }
    }
}

std::size_t CohBasis::index_of(const std::string& label) const
{
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] == label) {
            return j;
        }
    }
    throw ScenarioError("unknown basis label '" + label + "'");
}

WeightedPartition::WeightedPartition(std::vector<WeightedPart> pairs) : pairs_(std::move(pairs))
{
    for (const auto& p : pairs_) {
        if (p.part < 1) {
            throw ScenarioError("weighted partition parts must be positive");
        }
    }
    std::sort(pairs_.begin(), pairs_.end(), [](const auto& x, const auto& y) {
        return x.part != y.part ? x.part > y.part : x.index < y.index;
    });
}

int WeightedPartition::size() const
{
    int s = 0;
    for (const auto& p : pairs_) {
        s += p.part;
    }
    return s;
}

IntPartition WeightedPartition::shape() const
{
    std::vector<int> parts;
    for (const auto& p : pairs_) {
        parts.push_back(p.part);
    }
    return IntPartition(std::move(parts));
}

int WeightedPartition::nakajima_degree(const CohBasis& b) const
{
    int deg = size() - length();
    for (const auto& p : pairs_) {
        deg += b.complex_degree(p.index);
    }
    return deg;
}

std::string WeightedPartition::str() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        s += (i ? ",(" : "(") + std::to_string(pairs_[i].part) + ",#" + std::to_string(pairs_[i].index) + ")";
    }
    return s + "}";
}

std::string WeightedPartition::str(const CohBasis& b) const
{
    std::string s = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        s += (i ? ",(" : "(") + std::to_string(pairs_[i].part) + "," + b.labels.at(pairs_[i].index) + ")";
    }
    return s + "}";
}

std::int64_t aut_order(const WeightedPartition& eta)
{
    std::int64_t aut = 1;
    const auto& p = eta.pairs();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) {
            ++j;
        }
        for (std::int64_t m = 2; m <= static_cast<std::int64_t>(j - i); ++m) {
            aut *= m;
        }
        i = j;
    }
    return aut;
}

std::int64_t z_factor(const WeightedPartition& eta)
{
    std::int64_t z = aut_order(eta);
    for (const auto& p : eta.pairs()) {
        z *= p.part;
    }
    return z;
}

WeightedPartition dual_partition(const WeightedPartition& eta, const CohBasis& b)
{
    std::vector<WeightedPart> pairs;
    for (const auto& p : eta.pairs()) {
        pairs.push_back({p.part, b.duality.at(p.index)});
    }
    return WeightedPartition(std::move(pairs));
}

Rational nakajima_pairing(const WeightedPartition& eta, const WeightedPartition& nu, const CohBasis& b)
{
    if (eta.size() != nu.size()) {
        throw ScenarioError("Nakajima pairing between Hilbert schemes of different lengths");
    }
    if (!(nu == dual_partition(eta, b))) {
        return Rational(0);
    }
    Rational v(1L, static_cast<unsigned long>(z_factor(eta)));
    v.canonicalize();
    if ((eta.size() - eta.length()) % 2 != 0) {
        v = -v;
    }
    for (const auto& p : eta.pairs()) {
        v *= b.pairing.at(p.index).at(b.duality.at(p.index));
    }
    return v;
}

std::vector<WeightedPartition> enumerate_weighted_partitions(int d, std::size_t basis_size)
{
    std::vector<WeightedPartition> out;
    if (d < 0) {
        return out;
    }
    // pair types in canonical order: part descending, index ascending
    std::vector<WeightedPart> types;
    for (int a = d; a >= 1; --a) {
        for (std::size_t j = 0; j < basis_size; ++j) {
            types.push_back({a, j});
        }
    }
    std::vector<WeightedPart> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t t, int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (t == types.size()) {
            return;
        }
        const int a = types[t].part;
        const std::size_t before = cur.size();
        for (int m = left / a; m >= 0; --m) {
            cur.resize(before);
            for (int r = 0; r < m; ++r) {
                cur.push_back(types[t]);
            }
            rec(t + 1, left - m * a);
        }
        cur.resize(before);
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gwpt
