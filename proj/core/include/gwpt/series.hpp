#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwpt/gaussian.hpp"

namespace gwpt {

// An element of (1/2)Z, or +infinity (used as the order of an exact series).
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    template <std::integral T>
    constexpr HalfInteger(T integer) : twice_(2 * static_cast<std::int64_t>(integer))
    {
    }

    static constexpr HalfInteger from_twice(std::int64_t twice)
    {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInteger infinity() { return from_twice(kInfinite); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_infinite() const { return twice_ >= kInfinite; }
    constexpr bool is_integer() const { return !is_infinite() && twice_ % 2 == 0; }
    // Throws if the value is a proper half-integer or infinite.
    std::int64_t as_integer() const;
    Rational as_rational() const;

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b)
    {
        if (a.is_infinite() || b.is_infinite()) {
            return infinity();
        }
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b)
    {
        if (a.is_infinite()) {
            return infinity();
        }
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInteger operator-() const { return from_twice(-twice_); }
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

    std::string str() const;

private:
    static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;
    std::int64_t twice_ = 0;
};

enum class Variable { q, u };

std::string_view to_string(Variable v);

// Laurent series in one variable with exponents in (1/2)Z, known exactly below
// order(). Coefficients at or above order() are unknown; an infinite order means
// the stored terms are the whole series. Zero coefficients are never stored.
class TruncatedSeries {
public:
    // Keyed by twice the exponent.
    using Terms = std::map<std::int64_t, GaussianRational>;

    explicit TruncatedSeries(Variable var, HalfInteger order = HalfInteger::infinity());

    static TruncatedSeries from_terms(Variable var, const std::vector<std::pair<HalfInteger, GaussianRational>>& terms,
                                      HalfInteger order = HalfInteger::infinity());
    static TruncatedSeries constant(Variable var, const GaussianRational& c,
                                    HalfInteger order = HalfInteger::infinity());
    static TruncatedSeries monomial(Variable var, HalfInteger exponent, const GaussianRational& c,
                                    HalfInteger order = HalfInteger::infinity());

    Variable variable() const { return var_; }
    HalfInteger order() const { return order_; }
    bool is_exact() const { return order_.is_infinite(); }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    std::optional<HalfInteger> valuation() const;
    // Valuation, or the order when no term is stored (a zero known up to order()).
    HalfInteger effective_valuation() const;
    // Lowest stored coefficient; throws on an empty series.
    const GaussianRational& leading_coefficient() const;
    // Throws TruncationError when exponent >= order().
    GaussianRational coefficient(HalfInteger exponent) const;

    TruncatedSeries truncated(HalfInteger order) const;
    TruncatedSeries shifted(HalfInteger by) const;
    TruncatedSeries scaled(const GaussianRational& c) const;
    TruncatedSeries with_coefficient(HalfInteger exponent, const GaussianRational& c) const;
    // f(x) -> f(1/x); only defined for exact series.
    TruncatedSeries reflected() const;
    bool has_integer_exponents() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // "1 - q + q^2 + O(q^3)"
    std::string str() const;

private:
    void set(std::int64_t twice, GaussianRational c);

    Variable var_;
    HalfInteger order_;
    Terms terms_;
};

// Coefficientwise sum; the order is the smaller of the two.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Cauchy product; order = min(a.order + val(b), b.order + val(a)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Inverse with the precision carried by a (order(a) - 2 val(a)). Exact input must be a monomial.
TruncatedSeries invert(const TruncatedSeries& a);
// Inverse computed up to an explicit order.
TruncatedSeries invert(const TruncatedSeries& a, HalfInteger order);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return a.scaled(GaussianRational(-1)); }

// sum_{n>=0} (c t)^n u^n / n!, truncated at order.
TruncatedSeries exp_linear(const GaussianRational& c, const Rational& t, HalfInteger order);

// Substitutes q = -e^{iu} into an exact Laurent polynomial in q with integer exponents:
// q^e -> (-1)^e e^{ieu}. Truncated q-series are rejected with TruncationError because
// their u-coefficients are not determined; use the RationalFunction overload instead.
TruncatedSeries substitute_q(const TruncatedSeries& a, HalfInteger u_order);

// True iff both series agree on every exponent below `bound` and both know that far.
bool agree_below(const TruncatedSeries& a, const TruncatedSeries& b, HalfInteger bound);

} // namespace gwpt
