#include "gwpt/graded_series.hpp"

#include <sstream>

#include "gwpt/error.hpp"

namespace gwpt {

GradedSeries::GradedSeries(CurveClassLattice lattice, std::int64_t degree_bound, Variable var)
    : lattice_(std::move(lattice)), bound_(degree_bound), var_(var)
{
    if (bound_ < 0) {
        throw LatticeError("degree bound must be non-negative");
    }
}

GradedSeries GradedSeries::unit(CurveClassLattice lattice, std::int64_t degree_bound, Variable var)
{
    GradedSeries g(std::move(lattice), degree_bound, var);
    g.set(EffectiveClass::zero(g.lattice_.rank()), TruncatedSeries::constant(var, GaussianRational(1)));
    return g;
}

TruncatedSeries GradedSeries::at(const EffectiveClass& c) const
{
    auto it = entries_.find(c);
    return it == entries_.end() ? TruncatedSeries(var_) : it->second;
}

void GradedSeries::set(const EffectiveClass& c, TruncatedSeries s)
{
    if (lattice_.degree(c) > bound_) {
        throw LatticeError("class " + c.str() + " is above the degree bound " + std::to_string(bound_));
    }
    if (s.variable() != var_) {
        throw VariableMismatch("graded series entries must share one variable");
    }
    if (s.is_zero() && s.is_exact()) {
        entries_.erase(c);
    } else {
        entries_.insert_or_assign(c, std::move(s));
    }
}

void GradedSeries::add_to(const EffectiveClass& c, const TruncatedSeries& s)
{
    auto it = entries_.find(c);
    set(c, it == entries_.end() ? s : add(it->second, s));
}

GradedSeries GradedSeries::truncated(std::int64_t degree_bound) const
{
    GradedSeries g(lattice_, std::min(bound_, degree_bound), var_);
    for (const auto& [c, s] : entries_) {
        if (lattice_.degree(c) <= g.bound_) {
            g.entries_.emplace(c, s);
        }
    }
    return g;
}

std::string GradedSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, s] : entries_) {
        os << (first ? "" : "\n") << "v^" << c.str() << ": " << s.str();
        first = false;
    }
    return first ? "0" : os.str();
}

namespace {

void require_compatible(const GradedSeries& a, const GradedSeries& b)
{
    if (!(a.lattice() == b.lattice())) {
        throw LatticeError("graded series over different lattices");
    }
    if (a.variable() != b.variable()) {
        throw VariableMismatch("graded series in different variables");
    }
}

} // namespace

GradedSeries gmul(const GradedSeries& a, const GradedSeries& b)
{
    require_compatible(a, b);
    GradedSeries out(a.lattice(), std::min(a.degree_bound(), b.degree_bound()), a.variable());
    for (const auto& [ca, sa] : a.entries()) {
        const auto da = a.lattice().degree(ca);
        if (da > out.degree_bound()) {
            continue;
        }
        for (const auto& [cb, sb] : b.entries()) {
            if (da + a.lattice().degree(cb) > out.degree_bound()) {
                continue;
            }
            out.add_to(ca + cb, mul(sa, sb));
        }
    }
    return out;
}

GradedSeries ginvert(const GradedSeries& a, std::optional<HalfInteger> order)
{
    const auto zero = EffectiveClass::zero(a.lattice().rank());
    if (!a.contains(zero)) {
        throw InversionError("graded series has no degree-0 entry to invert");
    }
    const TruncatedSeries& a0 = a.entries().at(zero);
    const TruncatedSeries a0_inv = order ? invert(a0, *order) : invert(a0);
    GradedSeries out(a.lattice(), a.degree_bound(), a.variable());
    out.set(zero, a0_inv);
    for (const auto& c : a.lattice().classes_up_to(a.degree_bound())) {
        if (c.is_zero()) {
            continue;
        }
        TruncatedSeries acc(a.variable());
        for (const auto& [ca, sa] : a.entries()) {
            if (ca.is_zero()) {
                continue;
            }
            auto rest = c.minus(ca);
            if (!rest || !out.contains(*rest)) {
                continue;
            }
            acc = add(acc, mul(sa, out.entries().at(*rest)));
        }
        if (!acc.is_zero() || !acc.is_exact()) {
            out.set(c, -mul(a0_inv, acc));
        }
    }
    return out;
}

GradedSeries pushforward_classes(const GradedSeries& a, const LatticeMap& f, const CurveClassLattice& target,
                                 const PushforwardOptions& options)
{
    if (f.kind() == MapKind::gysin) {
        throw LatticeError("pushforward_classes needs a pushforward or inclusion map");
    }
    if (f.source_rank() != a.lattice().rank() || f.target_rank() != target.rank()) {
        throw LatticeError("pushforward map does not match the lattices");
    }
    // Largest target degree D whose whole fiber sits inside the source bound:
    // a source generator g contributes w(g) to the source degree and w'(f g) to the target.
    bool killed = false;
    Rational worst(0);
    for (std::size_t j = 0; j < f.source_rank(); ++j) {
        const auto img = target.degree(EffectiveClass(f.column(j)));
        if (img == 0) {
            killed = true;
            continue;
        }
        Rational r(static_cast<long>(a.lattice().degree_weights()[j]), static_cast<long>(img));
        r.canonicalize();
        if (r > worst) {
            worst = r;
        }
    }
    std::int64_t supported = 0;
    if (sgn(worst) > 0) {
        mpz_class q = mpz_class(Rational(static_cast<long>(a.degree_bound()) / worst));
        supported = q.get_si();
    }
    if (!options.assume_vanishing_beyond_bound) {
        if (killed) {
            throw LatticeError("pushforward kills a generator: fibers are unbounded below every degree "
                               "(pass assume_vanishing_beyond_bound to sum the stored entries anyway)");
        }
        if (options.target_bound && *options.target_bound > supported) {
            throw LatticeError("target bound " + std::to_string(*options.target_bound) +
                               " needs source classes beyond the source bound; at most " +
                               std::to_string(supported) + " is determined");
        }
    }
    const std::int64_t bound = options.target_bound.value_or(supported);
    GradedSeries out(target, bound, a.variable());
    for (const auto& [c, s] : a.entries()) {
        const EffectiveClass img(f.apply(c));
        if (target.degree(img) <= bound) {
            out.add_to(img, s);
        }
    }
    return out;
}

} // namespace gwpt
