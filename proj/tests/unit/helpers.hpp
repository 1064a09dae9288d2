#pragma once

#include <initializer_list>
#include <utility>

#include "gwpt/series.hpp"

namespace th {

using gwpt::GaussianRational;
using gwpt::HalfInteger;
using gwpt::Rational;
using gwpt::TruncatedSeries;
using gwpt::Variable;

inline GaussianRational gr(long num, long den = 1) { return GaussianRational(Rational(num, den)); }
inline GaussianRational gi(long num, long den = 1) { return GaussianRational(0, Rational(num, den)); }

// Integer-exponent literal: {{exponent, coefficient}, ...}.
inline TruncatedSeries series(Variable v, std::initializer_list<std::pair<int, GaussianRational>> terms,
                              HalfInteger order = HalfInteger::infinity())
{
    std::vector<std::pair<HalfInteger, GaussianRational>> t;
    for (const auto& [e, c] : terms) {
        t.emplace_back(HalfInteger(e), c);
    }
    return TruncatedSeries::from_terms(v, t, order);
}

inline TruncatedSeries qs(std::initializer_list<std::pair<int, GaussianRational>> terms,
                          HalfInteger order = HalfInteger::infinity())
{
    return series(Variable::q, terms, order);
}

inline TruncatedSeries us(std::initializer_list<std::pair<int, GaussianRational>> terms,
                          HalfInteger order = HalfInteger::infinity())
{
    return series(Variable::u, terms, order);
}

} // namespace th
