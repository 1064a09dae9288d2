#include "gwpt/rational_function.hpp"

#include <algorithm>
#include <limits>

#include "gwpt/error.hpp"
#include "gwpt/linear_algebra.hpp"

namespace gwpt {

namespace {

std::int64_t max_exponent(const TruncatedSeries& s) { return HalfInteger::from_twice(s.terms().rbegin()->first).as_integer(); }
std::int64_t min_exponent(const TruncatedSeries& s) { return s.valuation()->as_integer(); }

std::int64_t ceil_half(std::int64_t twice) { return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2); }

} // namespace

RationalFunction::RationalFunction(TruncatedSeries numerator, TruncatedSeries denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (!num_.is_exact() || !den_.is_exact()) {
        throw Error("rational function parts must be exact Laurent polynomials");
    }
    if (num_.variable() != den_.variable()) {
        throw VariableMismatch("rational function parts use different variables");
    }
    if (den_.is_zero()) {
        throw InversionError("rational function with zero denominator");
    }
    if (!num_.has_integer_exponents() || !den_.has_integer_exponents()) {
        throw Error("rational functions are restricted to integer exponents");
    }
    const GaussianRational lead_inv = den_.leading_coefficient().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

TruncatedSeries RationalFunction::expand(HalfInteger order) const
{
    if (num_.is_zero()) {
        return TruncatedSeries(num_.variable(), order);
    }
    const HalfInteger inv_order = order - *num_.valuation();
    return mul(num_, invert(den_, inv_order)).truncated(order);
}

std::string RationalFunction::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

std::optional<RationalFunction> rational_reconstruct(const TruncatedSeries& a, int num_deg, int den_deg)
{
    if (num_deg < 0 || den_deg < 0) {
        throw Error("Pade degree bounds must be non-negative");
    }
    if (!a.has_integer_exponents()) {
        throw Error("rational reconstruction needs integer exponents");
    }
    const Variable var = a.variable();
    const std::int64_t shift = a.is_zero() ? 0 : std::min<std::int64_t>(min_exponent(a), 0);
    const auto n = static_cast<std::int64_t>(num_deg);
    const auto m = static_cast<std::int64_t>(den_deg);
    std::int64_t known = 0;
    if (a.is_exact()) {
        known = (a.is_zero() ? 0 : max_exponent(a) - shift + 1) + n + m + 1;
    } else {
        known = ceil_half(a.order().twice() - 2 * shift);
    }
    if (known < n + m + 1) {
        throw TruncationError("Pade bounds (" + std::to_string(num_deg) + "," + std::to_string(den_deg) +
                              ") need " + std::to_string(n + m + 1) + " known coefficients, have " +
                              std::to_string(known));
    }
    std::vector<GaussianRational> b(static_cast<std::size_t>(known));
    for (const auto& [k, c] : a.terms()) {
        const std::int64_t idx = k / 2 - shift;
        if (idx < known) {
            b[static_cast<std::size_t>(idx)] = c;
        }
    }
    auto coeff = [&](std::int64_t idx) { return idx < 0 ? GaussianRational() : b[static_cast<std::size_t>(idx)]; };

    std::vector<GaussianRational> d(static_cast<std::size_t>(m + 1));
    d[0] = GaussianRational(1);
    if (m > 0) {
        linalg::Matrix<GaussianRational> sys;
        std::vector<GaussianRational> rhs;
        for (std::int64_t k = n + 1; k < known; ++k) {
            std::vector<GaussianRational> row(static_cast<std::size_t>(m));
            for (std::int64_t j = 1; j <= m; ++j) {
                row[static_cast<std::size_t>(j - 1)] = coeff(k - j);
            }
            sys.push_back(std::move(row));
            rhs.push_back(-coeff(k));
        }
        auto sol = linalg::solve(std::move(sys), std::move(rhs), static_cast<std::size_t>(m));
        if (!sol) {
            return std::nullopt;
        }
        for (std::int64_t j = 1; j <= m; ++j) {
            d[static_cast<std::size_t>(j)] = (*sol)[static_cast<std::size_t>(j - 1)];
        }
    } else {
        for (std::int64_t k = n + 1; k < known; ++k) {
            if (!coeff(k).is_zero()) {
                return std::nullopt;
            }
        }
    }
    std::vector<std::pair<HalfInteger, GaussianRational>> num_terms;
    std::vector<std::pair<HalfInteger, GaussianRational>> den_terms;
    for (std::int64_t k = 0; k <= n; ++k) {
        GaussianRational s;
        for (std::int64_t j = 0; j <= std::min(k, m); ++j) {
            s += coeff(k - j) * d[static_cast<std::size_t>(j)];
        }
        num_terms.emplace_back(HalfInteger(k + shift), s);
    }
    for (std::int64_t j = 0; j <= m; ++j) {
        den_terms.emplace_back(HalfInteger(j), d[static_cast<std::size_t>(j)]);
    }
    return RationalFunction(TruncatedSeries::from_terms(var, num_terms), TruncatedSeries::from_terms(var, den_terms));
}

std::int64_t known_coefficients(const TruncatedSeries& a)
{
    if (a.is_exact()) {
        return std::numeric_limits<std::int64_t>::max();
    }
    const std::int64_t shift = a.is_zero() ? 0 : std::min<std::int64_t>(min_exponent(a), 0);
    return ceil_half(a.order().twice() - 2 * shift);
}

std::optional<RationalFunction> reconstruct_rational(const TruncatedSeries& a, int slack)
{
    if (a.is_exact()) {
        return RationalFunction(a, TruncatedSeries::constant(a.variable(), GaussianRational(1)));
    }
    if (!a.has_integer_exponents()) {
        return std::nullopt;
    }
    const std::int64_t known = known_coefficients(a);
    for (std::int64_t m = 0;; ++m) {
        const std::int64_t n = known - 1 - slack - m;
        if (n < 0) {
            return std::nullopt;
        }
        if (auto f = rational_reconstruct(a, static_cast<int>(n), static_cast<int>(m))) {
            return f;
        }
    }
}

bool check_q_inverse_symmetry(const RationalFunction& f)
{
    const auto lhs = mul(f.numerator(), f.denominator().reflected());
    const auto rhs = mul(f.numerator().reflected(), f.denominator());
    return lhs == rhs;
}

TruncatedSeries substitute_q(const RationalFunction& f, HalfInteger u_order)
{
    const TruncatedSeries& den = f.denominator();
    const std::int64_t span = max_exponent(den) - min_exponent(den);
    // den(-e^{iu}) vanishes to order <= span at u = 0, so one more than 2 span keeps a term
    const HalfInteger padded = std::max(u_order, HalfInteger(0)) + HalfInteger(2 * span + 1);
    const TruncatedSeries num_u = substitute_q(f.numerator(), padded);
    const TruncatedSeries den_u = substitute_q(den, padded);
    if (den_u.is_zero()) {
        throw InversionError("denominator vanishes identically after q = -e^{iu}");
    }
    return mul(num_u, invert(den_u)).truncated(u_order);
}

} // namespace gwpt
