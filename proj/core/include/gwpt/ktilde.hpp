#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwpt/partitions.hpp"
#include "gwpt/series.hpp"

namespace gwpt {

// c1^e1 c2^e2 c3^e3
struct ChernMonomial {
    int e1 = 0;
    int e2 = 0;
    int e3 = 0;

    int degree() const { return e1 + 2 * e2 + 3 * e3; }
    bool is_one() const { return e1 == 0 && e2 == 0 && e3 == 0; }
    friend auto operator<=>(const ChernMonomial&, const ChernMonomial&) = default;
    friend bool operator==(const ChernMonomial&, const ChernMonomial&) = default;
    // "c1^2 c2", "1"
    std::string str() const;
};

std::vector<ChernMonomial> chern_monomials_of_degree(int d);

// Polynomial in c1, c2, c3 with u-series coefficients; zero series are not stored.
using ChernPolynomial = std::map<ChernMonomial, TruncatedSeries>;

struct KtildeTable {
    std::map<std::pair<IntPartition, IntPartition>, ChernPolynomial> entries;
};

// |alpha| + l(alpha) - |hat| - l(hat) - 3 (l(alpha) - 1)
int ktilde_degree(const IntPartition& alpha, const IntPartition& hat);

struct KtildeViolation {
    IntPartition alpha;
    IntPartition hat;
    std::string what;
};

// Empty when every entry vanishes for |alpha| < |hat| and is homogeneous of ktilde_degree.
std::vector<KtildeViolation> validate_Ktilde(const KtildeTable& k);

struct BarClass {
    std::string label;
    // real degree, even
    int degree = 0;
};

// Which Chern classes act on the insertions: c_i(T_M) or c_i(T_M(-log D)).
struct ChernSubstitution {
    bool log = false;
    std::string label(int i) const;
};

// c^m gamma_S: a Chern monomial times the product of the insertion classes in S.
struct FormalClass {
    ChernMonomial chern;
    std::vector<std::size_t> gammas;

    friend auto operator<=>(const FormalClass&, const FormalClass&) = default;
    friend bool operator==(const FormalClass&, const FormalClass&) = default;
};

struct BarFactor {
    IntPartition hat;
    FormalClass cls;

    friend auto operator<=>(const BarFactor&, const BarFactor&) = default;
    friend bool operator==(const BarFactor&, const BarFactor&) = default;
};

// A product of tau_[hat](c^m gamma_S) with its u-series coefficient.
struct BarTerm {
    std::vector<BarFactor> factors;
    TruncatedSeries coefficient{Variable::u};

    friend bool operator==(const BarTerm&, const BarTerm&) = default;
};

struct BarInput {
    // alpha_j of tau_{alpha_j - 1}(gamma_j)
    std::vector<int> alpha;
    std::vector<BarClass> gammas;
};

// The input itself as a formal sum with coefficient 1.
std::vector<BarTerm> bar_identity(const BarInput& in);

// Sum over set partitions P of {1..l} of prod_{S in P} sum_hat tau_[hat](K_{alpha_S, hat} gamma_S).
// Classes above complex degree `dimension` are dropped; missing table entries count as zero.
std::vector<BarTerm> bar_transform(const BarInput& in, const KtildeTable& k, const ChernSubstitution& chern,
                                   int dimension = 3);

std::string str(const BarTerm& t, const BarInput& in, const ChernSubstitution& chern);

} // namespace gwpt
