#include "gwpt/series.hpp"

#include <algorithm>
#include <sstream>

#include "gwpt/error.hpp"

namespace gwpt {

std::int64_t HalfInteger::as_integer() const
{
    if (!is_integer()) {
        throw Error("expected an integer exponent, got " + str());
    }
    return twice_ / 2;
}

Rational HalfInteger::as_rational() const
{
    if (is_infinite()) {
        throw Error("infinite exponent has no rational value");
    }
    Rational r(static_cast<long>(twice_), 2L);
    r.canonicalize();
    return r;
}

std::string HalfInteger::str() const
{
    if (is_infinite()) {
        return "inf";
    }
    if (twice_ % 2 == 0) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

std::string_view to_string(Variable v) { return v == Variable::q ? "q" : "u"; }

TruncatedSeries::TruncatedSeries(Variable var, HalfInteger order) : var_(var), order_(order) {}

TruncatedSeries TruncatedSeries::from_terms(Variable var,
                                            const std::vector<std::pair<HalfInteger, GaussianRational>>& terms,
                                            HalfInteger order)
{
    TruncatedSeries s(var, order);
    for (const auto& [e, c] : terms) {
        if (e >= order) {
            continue;
        }
        auto it = s.terms_.find(e.twice());
        GaussianRational sum = (it == s.terms_.end()) ? c : it->second + c;
        s.set(e.twice(), std::move(sum));
    }
    return s;
}

TruncatedSeries TruncatedSeries::constant(Variable var, const GaussianRational& c, HalfInteger order)
{
    return monomial(var, 0, c, order);
}

TruncatedSeries TruncatedSeries::monomial(Variable var, HalfInteger exponent, const GaussianRational& c,
                                          HalfInteger order)
{
    TruncatedSeries s(var, order);
    if (exponent < order) {
        s.set(exponent.twice(), c);
    }
    return s;
}

void TruncatedSeries::set(std::int64_t twice, GaussianRational c)
{
    if (c.is_zero()) {
        terms_.erase(twice);
    } else {
        terms_[twice] = std::move(c);
    }
}

std::optional<HalfInteger> TruncatedSeries::valuation() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return HalfInteger::from_twice(terms_.begin()->first);
}

HalfInteger TruncatedSeries::effective_valuation() const
{
    if (terms_.empty()) {
        return order_;
    }
    return HalfInteger::from_twice(terms_.begin()->first);
}

const GaussianRational& TruncatedSeries::leading_coefficient() const
{
    if (terms_.empty()) {
        throw InversionError("empty series has no leading coefficient");
    }
    return terms_.begin()->second;
}

GaussianRational TruncatedSeries::coefficient(HalfInteger exponent) const
{
    if (exponent >= order_) {
        throw TruncationError("coefficient of " + std::string(to_string(var_)) + "^" + exponent.str() +
                              " is beyond the truncation order " + order_.str());
    }
    auto it = terms_.find(exponent.twice());
    return it == terms_.end() ? GaussianRational() : it->second;
}

TruncatedSeries TruncatedSeries::truncated(HalfInteger order) const
{
    TruncatedSeries s(var_, std::min(order, order_));
    for (const auto& [k, c] : terms_) {
        if (HalfInteger::from_twice(k) >= s.order_) {
            break;
        }
        s.terms_.emplace(k, c);
    }
    return s;
}

TruncatedSeries TruncatedSeries::shifted(HalfInteger by) const
{
    TruncatedSeries s(var_, order_ + by);
    for (const auto& [k, c] : terms_) {
        s.terms_.emplace(k + by.twice(), c);
    }
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const GaussianRational& c) const
{
    TruncatedSeries s(var_, order_);
    if (c.is_zero()) {
        return s;
    }
    for (const auto& [k, v] : terms_) {
        s.terms_.emplace(k, v * c);
    }
    return s;
}

TruncatedSeries TruncatedSeries::with_coefficient(HalfInteger exponent, const GaussianRational& c) const
{
    if (exponent >= order_) {
        throw TruncationError("cannot set a coefficient beyond the truncation order");
    }
    TruncatedSeries s = *this;
    s.set(exponent.twice(), c);
    return s;
}

TruncatedSeries TruncatedSeries::reflected() const
{
    if (!is_exact()) {
        throw TruncationError("x -> 1/x is only defined for exact Laurent polynomials");
    }
    TruncatedSeries s(var_);
    for (const auto& [k, c] : terms_) {
        s.terms_.emplace(-k, c);
    }
    return s;
}

bool TruncatedSeries::has_integer_exponents() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first % 2 == 0; });
}

std::string TruncatedSeries::str() const
{
    std::ostringstream os;
    const std::string x(to_string(var_));
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const HalfInteger e = HalfInteger::from_twice(k);
        std::string coeff = c.str();
        const bool compound = !c.is_real() && sgn(c.re()) != 0;
        if (compound) {
            coeff = "(" + coeff + ")";
        }
        bool negative = !compound && !coeff.empty() && coeff.front() == '-';
        if (negative) {
            coeff.erase(0, 1);
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << coeff;
            continue;
        }
        if (coeff != "1") {
            os << coeff;
        }
        os << x;
        if (k != 2) {
            os << "^" << (e.is_integer() ? e.str() : "(" + e.str() + ")");
        }
    }
    if (!is_exact()) {
        os << (first ? "" : " + ") << "O(" << x << "^" << order_.str() << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

namespace {

void require_same_variable(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.variable() != b.variable()) {
        throw VariableMismatch("cannot combine a series in " + std::string(to_string(a.variable())) +
                               " with a series in " + std::string(to_string(b.variable())));
    }
}

} // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_variable(a, b);
    const HalfInteger order = std::min(a.order(), b.order());
    std::vector<std::pair<HalfInteger, GaussianRational>> terms;
    terms.reserve(a.size() + b.size());
    for (const auto& [k, c] : a.terms()) {
        terms.emplace_back(HalfInteger::from_twice(k), c);
    }
    for (const auto& [k, c] : b.terms()) {
        terms.emplace_back(HalfInteger::from_twice(k), c);
    }
    return TruncatedSeries::from_terms(a.variable(), terms, order);
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, -b); }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_variable(a, b);
    const HalfInteger order =
        std::min(a.order() + b.effective_valuation(), b.order() + a.effective_valuation());
    std::map<std::int64_t, GaussianRational> acc;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const std::int64_t k = ka + kb;
            if (HalfInteger::from_twice(k) >= order) {
                break;
            }
            acc[k] += ca * cb;
        }
    }
    TruncatedSeries out(a.variable(), order);
    std::vector<std::pair<HalfInteger, GaussianRational>> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc) {
        terms.emplace_back(HalfInteger::from_twice(k), std::move(c));
    }
    return TruncatedSeries::from_terms(a.variable(), terms, order);
}

TruncatedSeries invert(const TruncatedSeries& a)
{
    if (a.is_zero()) {
        throw InversionError("cannot invert a zero series");
    }
    if (a.is_exact()) {
        if (a.size() != 1) {
            throw InversionError("inverting an exact non-monomial series needs an explicit order");
        }
        const auto& [k, c] = *a.terms().begin();
        return TruncatedSeries::monomial(a.variable(), HalfInteger::from_twice(-k), c.inverse());
    }
    const HalfInteger v = *a.valuation();
    return invert(a, a.order() - v - v);
}

TruncatedSeries invert(const TruncatedSeries& a, HalfInteger order)
{
    if (a.is_zero()) {
        throw InversionError("cannot invert a zero series");
    }
    const HalfInteger v = *a.valuation();
    const std::int64_t vt = v.twice();
    // Relative precision available from the input.
    const HalfInteger available = a.order() - v - v;
    if (order > available) {
        order = available;
    }
    if (order.is_infinite()) {
        return invert(a);
    }
    const GaussianRational lead_inv = a.leading_coefficient().inverse();
    // Relative coefficients a_k = coefficient at v + k/2, k >= 1.
    std::vector<std::pair<std::int64_t, const GaussianRational*>> tail;
    for (const auto& [k, c] : a.terms()) {
        if (k != vt) {
            tail.emplace_back(k - vt, &c);
        }
    }
    // b_j is the coefficient at -v + j/2.
    const std::int64_t count = order.twice() + vt;
    std::vector<GaussianRational> b(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    for (std::int64_t j = 0; j < count; ++j) {
        if (j == 0) {
            b[0] = lead_inv;
            continue;
        }
        GaussianRational s;
        for (const auto& [k, c] : tail) {
            if (k > j) {
                break;
            }
            const auto& bj = b[static_cast<std::size_t>(j - k)];
            if (!bj.is_zero()) {
                s += *c * bj;
            }
        }
        b[static_cast<std::size_t>(j)] = -(s * lead_inv);
    }
    std::vector<std::pair<HalfInteger, GaussianRational>> terms;
    for (std::int64_t j = 0; j < count; ++j) {
        if (!b[static_cast<std::size_t>(j)].is_zero()) {
            terms.emplace_back(HalfInteger::from_twice(j - vt), std::move(b[static_cast<std::size_t>(j)]));
        }
    }
    return TruncatedSeries::from_terms(a.variable(), terms, order);
}

TruncatedSeries exp_linear(const GaussianRational& c, const Rational& t, HalfInteger order)
{
    if (order.is_infinite()) {
        throw TruncationError("exp_linear needs a finite order");
    }
    const GaussianRational x = c * GaussianRational(t);
    std::vector<std::pair<HalfInteger, GaussianRational>> terms;
    GaussianRational term(1);
    for (std::int64_t n = 0; HalfInteger(n) < order; ++n) {
        if (n > 0) {
            term = term * x / GaussianRational(n);
        }
        terms.emplace_back(HalfInteger(n), term);
        if (term.is_zero()) {
            break;
        }
    }
    return TruncatedSeries::from_terms(Variable::u, terms, order);
}

TruncatedSeries substitute_q(const TruncatedSeries& a, HalfInteger u_order)
{
    if (a.variable() != Variable::q) {
        throw VariableMismatch("substitute_q expects a series in q");
    }
    if (!a.is_exact()) {
        throw TruncationError("substitute_q needs an exact Laurent polynomial; a series known only below q^" +
                              a.order().str() + " does not determine its u-expansion (reconstruct it first)");
    }
    if (!a.has_integer_exponents()) {
        throw TruncationError("substitute_q: half-integer powers of q have no fixed branch under q = -e^{iu}");
    }
    TruncatedSeries out = TruncatedSeries(Variable::u, u_order);
    for (const auto& [k, c] : a.terms()) {
        const std::int64_t e = k / 2;
        const GaussianRational sign = (e % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
        out = add(out, exp_linear(GaussianRational::i(), Rational(static_cast<long>(e)), u_order).scaled(c * sign));
    }
    return out;
}

bool agree_below(const TruncatedSeries& a, const TruncatedSeries& b, HalfInteger bound)
{
    if (a.variable() != b.variable() || a.order() < bound || b.order() < bound) {
        return false;
    }
    return a.truncated(bound).terms() == b.truncated(bound).terms();
}

} // namespace gwpt
