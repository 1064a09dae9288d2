#include "gwpt/ktilde.hpp"

#include <algorithm>
#include <functional>

#include "gwpt/error.hpp"

namespace gwpt {

std::string ChernMonomial::str() const
{
    std::string out;
    const int es[3] = {e1, e2, e3};
    for (int i = 0; i < 3; ++i) {
        if (es[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += "c" + std::to_string(i + 1);
        if (es[i] > 1) {
            out += "^" + std::to_string(es[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::vector<ChernMonomial> chern_monomials_of_degree(int d)
{
    std::vector<ChernMonomial> out;
    if (d < 0) {
        return out;
    }
    for (int e3 = 0; 3 * e3 <= d; ++e3) {
        for (int e2 = 0; 3 * e3 + 2 * e2 <= d; ++e2) {
            out.push_back({d - 3 * e3 - 2 * e2, e2, e3});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ktilde_degree(const IntPartition& alpha, const IntPartition& hat)
{
    return alpha.size() + alpha.length() - hat.size() - hat.length() - 3 * (alpha.length() - 1);
}

std::vector<KtildeViolation> validate_Ktilde(const KtildeTable& k)
{
    std::vector<KtildeViolation> out;
    for (const auto& [key, poly] : k.entries) {
        const auto& [alpha, hat] = key;
        std::vector<const TruncatedSeries*> nonzero;
        for (const auto& [m, s] : poly) {
            if (!s.is_zero()) {
                nonzero.push_back(&s);
            }
        }
        if (alpha.size() < hat.size()) {
            if (!nonzero.empty()) {
                out.push_back({alpha, hat, "nonzero although |alpha| < |alpha_hat|"});
            }
            continue;
        }
        const int d = ktilde_degree(alpha, hat);
        // Homogeneity is audited per u-coefficient: every monomial carrying it must have degree d.
        std::map<std::int64_t, std::vector<ChernMonomial>> by_exponent;
        for (const auto& [m, s] : poly) {
            for (const auto& [e, c] : s.terms()) {
                by_exponent[e].push_back(m);
            }
        }
        for (const auto& [e, monos] : by_exponent) {
            for (const auto& m : monos) {
                if (m.degree() != d) {
                    out.push_back({alpha, hat,
                                   "u^" + HalfInteger::from_twice(e).str() + " coefficient has the monomial " +
                                       m.str() + " of degree " + std::to_string(m.degree()) + ", expected " +
                                       std::to_string(d)});
                    break;
                }
            }
        }
    }
    return out;
}

std::string ChernSubstitution::label(int i) const
{
    return "c" + std::to_string(i) + (log ? "(T(-log D))" : "(T)");
}

std::vector<BarTerm> bar_identity(const BarInput& in)
{
    BarTerm t;
    for (std::size_t j = 0; j < in.alpha.size(); ++j) {
        t.factors.push_back({IntPartition({in.alpha[j]}), {ChernMonomial{}, {j}}});
    }
    std::sort(t.factors.begin(), t.factors.end());
    t.coefficient = TruncatedSeries::constant(Variable::u, GaussianRational(1));
    return {t};
}

std::vector<BarTerm> bar_transform(const BarInput& in, const KtildeTable& k, const ChernSubstitution& chern,
                                   int dimension)
{
    (void)chern;
    const std::size_t n = in.alpha.size();
    if (in.gammas.size() != n) {
        throw ScenarioError("bar transform: one class per descendant is needed");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (in.alpha[j] < 1) {
            throw ScenarioError("bar transform: alpha parts must be positive");
        }
        if (in.gammas[j].degree % 2 != 0) {
            throw ScenarioError("bar transform: odd class '" + in.gammas[j].label +
                                "' is not supported (sign conventions differ)");
        }
    }
    const auto bad = validate_Ktilde(k);
    if (!bad.empty()) {
        throw ScenarioError("bar transform: K-tilde entry " + bad.front().alpha.str() + "," + bad.front().hat.str() +
                            " " + bad.front().what);
    }

    std::map<std::vector<BarFactor>, TruncatedSeries> acc;
    const int nn = static_cast<int>(n);
    for (const auto& p : enumerate_set_partitions(nn)) {
        // per block: candidate (factor, coefficient) pairs
        std::vector<std::vector<std::pair<BarFactor, const TruncatedSeries*>>> options;
        for (const auto& block : p.blocks) {
            std::vector<int> parts;
            std::vector<std::size_t> gs;
            int gdeg = 0;
            for (int idx : block) {
                const auto j = static_cast<std::size_t>(idx - 1);
                parts.push_back(in.alpha[j]);
                gs.push_back(j);
                gdeg += in.gammas[j].degree / 2;
            }
            const IntPartition alpha_s(parts);
            std::vector<std::pair<BarFactor, const TruncatedSeries*>> opts;
            for (const auto& [key, poly] : k.entries) {
                const auto& [a, hat] = key;
                if (!(a == alpha_s) || hat.empty() || hat.size() > alpha_s.size()) {
                    continue;
                }
                for (const auto& [m, s] : poly) {
                    if (s.is_zero() || m.degree() + gdeg > dimension) {
                        continue;
                    }
                    opts.push_back({BarFactor{hat, FormalClass{m, gs}}, &s});
                }
            }
            options.push_back(std::move(opts));
        }
        std::vector<BarFactor> cur;
        std::function<void(std::size_t, const TruncatedSeries&)> rec = [&](std::size_t b,
                                                                           const TruncatedSeries& coeff) {
            if (b == options.size()) {
                auto key = cur;
                std::sort(key.begin(), key.end());
                auto it = acc.find(key);
                if (it == acc.end()) {
                    acc.emplace(std::move(key), coeff);
                } else {
                    it->second = it->second + coeff;
                }
                return;
            }
            for (const auto& [f, s] : options[b]) {
                cur.push_back(f);
                rec(b + 1, coeff * *s);
                cur.pop_back();
            }
        };
        rec(0, TruncatedSeries::constant(Variable::u, GaussianRational(1)));
    }
    std::vector<BarTerm> out;
    for (auto& [f, s] : acc) {
        if (!s.is_zero()) {
            out.push_back({f, s});
        }
    }
    return out;
}

std::string str(const BarTerm& t, const BarInput& in, const ChernSubstitution& chern)
{
    std::string out = "(" + t.coefficient.str() + ")";
    for (const auto& f : t.factors) {
        std::string cls;
        const int es[3] = {f.cls.chern.e1, f.cls.chern.e2, f.cls.chern.e3};
        for (int i = 0; i < 3; ++i) {
            for (int e = 0; e < es[i]; ++e) {
                cls += (cls.empty() ? "" : " ") + chern.label(i + 1);
            }
        }
        for (auto g : f.cls.gammas) {
            cls += (cls.empty() ? "" : " ") + in.gammas[g].label;
        }
        if (cls.empty()) {
            cls = "1";
        }
        if (f.hat.length() == 1) {
            out += " tau_" + std::to_string(f.hat.parts()[0] - 1) + "(" + cls + ")";
        } else {
            out += " tau_[" + f.hat.str() + "](" + cls + ")";
        }
    }
    return out;
}

} // namespace gwpt
