#pragma once

#include <optional>
#include <string>

#include "gwpt/series.hpp"

namespace gwpt {

// Quotient of two exact Laurent polynomials in q with integer exponents.
// The denominator is normalized to have lowest coefficient 1 when it is a power series.
class RationalFunction {
public:
    RationalFunction(TruncatedSeries numerator, TruncatedSeries denominator);

    const TruncatedSeries& numerator() const { return num_; }
    const TruncatedSeries& denominator() const { return den_; }

    // Laurent expansion in q known exactly below `order`.
    TruncatedSeries expand(HalfInteger order) const;

    std::string str() const;

private:
    TruncatedSeries num_;
    TruncatedSeries den_;
};

// Pade test: finds N/D with deg N <= num_deg, deg D <= den_deg, D(0) = 1, whose expansion
// matches every known coefficient of a. Degrees are counted after factoring out q^min(val,0).
// Throws TruncationError when fewer than num_deg + den_deg + 1 coefficients are known.
std::optional<RationalFunction> rational_reconstruct(const TruncatedSeries& a, int num_deg, int den_deg);

// Searches denominators of increasing degree, always leaving `slack` known coefficients
// unused by the fit as a consistency margin. Exact inputs reconstruct trivially.
std::optional<RationalFunction> reconstruct_rational(const TruncatedSeries& a, int slack = 4);
// Coefficients reconstruct_rational can use (counted from min(valuation, 0)); a fit
// needs more than slack of them.
std::int64_t known_coefficients(const TruncatedSeries& a);

// f(q) == f(1/q) as rational functions.
bool check_q_inverse_symmetry(const RationalFunction& f);

// u-expansion of f(-e^{iu}), exact below u_order.
TruncatedSeries substitute_q(const RationalFunction& f, HalfInteger u_order);

} // namespace gwpt
