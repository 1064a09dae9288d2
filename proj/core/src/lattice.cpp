#include "gwpt/lattice.hpp"

#include <algorithm>
#include <functional>

#include "gwpt/error.hpp"
#include "gwpt/gaussian.hpp"
#include "gwpt/linear_algebra.hpp"

namespace gwpt {

EffectiveClass::EffectiveClass(IntVector coords) : coords_(std::move(coords))
{
    for (auto c : coords_) {
        if (c < 0) {
            throw LatticeError("effective class with a negative coordinate: " + str());
        }
    }
}

EffectiveClass EffectiveClass::generator(std::size_t rank, std::size_t i)
{
    IntVector v(rank, 0);
    v.at(i) = 1;
    return EffectiveClass(std::move(v));
}

bool EffectiveClass::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

EffectiveClass EffectiveClass::operator+(const EffectiveClass& o) const
{
    if (rank() != o.rank()) {
        throw LatticeError("adding classes of different ranks");
    }
    EffectiveClass r = *this;
    for (std::size_t i = 0; i < rank(); ++i) {
        r.coords_[i] += o.coords_[i];
    }
    return r;
}

std::optional<EffectiveClass> EffectiveClass::minus(const EffectiveClass& o) const
{
    if (rank() != o.rank()) {
        throw LatticeError("subtracting classes of different ranks");
    }
    EffectiveClass r = *this;
    for (std::size_t i = 0; i < rank(); ++i) {
        r.coords_[i] -= o.coords_[i];
        if (r.coords_[i] < 0) {
            return std::nullopt;
        }
    }
    return r;
}

std::string EffectiveClass::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(coords_[i]);
    }
    return s + ")";
}

CurveClassLattice::CurveClassLattice(IntVector degree_weights) : weights_(std::move(degree_weights))
{
    if (weights_.empty()) {
        throw LatticeError("lattice rank must be positive");
    }
    for (auto w : weights_) {
        if (w < 1) {
            throw LatticeError("degree weights must be >= 1, got " + std::to_string(w));
        }
    }
}

std::int64_t CurveClassLattice::degree(const EffectiveClass& c) const
{
    if (!owns(c)) {
        throw LatticeError("class " + c.str() + " does not belong to a rank " + std::to_string(rank()) + " lattice");
    }
    return pair(weights_, c.coords());
}

std::vector<EffectiveClass> classes_with_weighted_degree(const IntVector& weights, std::int64_t bound)
{
    std::vector<EffectiveClass> out;
    if (bound < 0) {
        return out;
    }
    IntVector cur(weights.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == weights.size()) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t n = 0; n * weights[i] <= left; ++n) {
            cur[i] = n;
            rec(i + 1, left - n * weights[i]);
        }
        cur[i] = 0;
    };
    rec(0, bound);
    return out;
}

std::vector<EffectiveClass> CurveClassLattice::classes_up_to(std::int64_t bound) const
{
    auto out = classes_with_weighted_degree(weights_, bound);
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        const auto da = degree(a);
        const auto db = degree(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

std::string to_string(MapKind k)
{
    switch (k) {
    case MapKind::pushforward:
        return "pushforward";
    case MapKind::gysin:
        return "gysin";
    case MapKind::inclusion:
        return "inclusion";
    }
    return "?";
}

namespace {

linalg::Matrix<Rational> to_rational(const IntMatrix& m)
{
    linalg::Matrix<Rational> r;
    for (const auto& row : m) {
        std::vector<Rational> rr;
        for (auto x : row) {
            rr.emplace_back(static_cast<long>(x));
        }
        r.push_back(std::move(rr));
    }
    return r;
}

} // namespace

LatticeMap::LatticeMap(MapKind kind, std::size_t source_rank, std::size_t target_rank, IntMatrix matrix,
                       IntMatrix image_functionals)
    : kind_(kind), source_rank_(source_rank), target_rank_(target_rank), matrix_(std::move(matrix)),
      functionals_(std::move(image_functionals))
{
    const std::string what = to_string(kind_) + " map";
    if (matrix_.size() != target_rank_) {
        throw LatticeError(what + ": matrix needs " + std::to_string(target_rank_) + " rows");
    }
    for (const auto& row : matrix_) {
        if (row.size() != source_rank_) {
            throw LatticeError(what + ": matrix rows need " + std::to_string(source_rank_) + " entries");
        }
    }
    for (const auto& f : functionals_) {
        if (f.size() != target_rank_) {
            throw LatticeError(what + ": image functionals must live on the target lattice");
        }
    }
    const std::size_t rk = linalg::rank(to_rational(matrix_), source_rank_);
    switch (kind_) {
    case MapKind::pushforward:
        if (rk != target_rank_) {
            throw LatticeError(what + " is not surjective over Q");
        }
        [[fallthrough]];
    case MapKind::inclusion:
        for (const auto& row : matrix_) {
            for (auto x : row) {
                if (x < 0) {
                    throw LatticeError(what + " sends an effective generator outside the effective cone");
                }
            }
        }
        break;
    case MapKind::gysin: {
        if (rk != source_rank_) {
            throw LatticeError(what + " is not injective");
        }
        for (std::size_t j = 0; j < source_rank_; ++j) {
            for (const auto& f : functionals_) {
                if (pair(f, column(j)) != 0) {
                    throw LatticeError(what + ": image functional does not vanish on column " + std::to_string(j));
                }
            }
        }
        const std::size_t frk = linalg::rank(to_rational(functionals_), target_rank_);
        if (frk + source_rank_ != target_rank_) {
            throw LatticeError(what + ": image functionals do not cut out exactly the image");
        }
        break;
    }
    }
}

IntVector LatticeMap::apply(const IntVector& v) const
{
    if (v.size() != source_rank_) {
        throw LatticeError(to_string(kind_) + " map applied to a vector of the wrong rank");
    }
    IntVector out(target_rank_, 0);
    for (std::size_t i = 0; i < target_rank_; ++i) {
        out[i] = pair(matrix_[i], v);
    }
    return out;
}

std::optional<EffectiveClass> LatticeMap::apply_effective(const EffectiveClass& c) const
{
    IntVector v = apply(c);
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) {
        return std::nullopt;
    }
    return EffectiveClass(std::move(v));
}

IntVector LatticeMap::column(std::size_t j) const
{
    IntVector c(target_rank_);
    for (std::size_t i = 0; i < target_rank_; ++i) {
        c[i] = matrix_[i][j];
    }
    return c;
}

IntMatrix LatticeMap::compose(const LatticeMap& inner) const
{
    if (inner.target_rank_ != source_rank_) {
        throw LatticeError("composing maps with mismatched ranks");
    }
    IntMatrix out(target_rank_, IntVector(inner.source_rank_, 0));
    for (std::size_t j = 0; j < inner.source_rank_; ++j) {
        const IntVector c = apply(inner.column(j));
        for (std::size_t i = 0; i < target_rank_; ++i) {
            out[i][j] = c[i];
        }
    }
    return out;
}

std::optional<EffectiveClass> injective_preimage(const EffectiveClass& c, const LatticeMap& f)
{
    if (c.rank() != f.target_rank()) {
        throw LatticeError("class " + c.str() + " is not in the target of the " + to_string(f.kind()) + " map");
    }
    std::vector<Rational> rhs;
    for (auto x : c.coords()) {
        rhs.emplace_back(static_cast<long>(x));
    }
    auto sol = linalg::solve(to_rational(f.matrix()), std::move(rhs), f.source_rank());
    if (!sol) {
        return std::nullopt;
    }
    IntVector out;
    for (const auto& x : *sol) {
        if (x.get_den() != 1 || sgn(x) < 0) {
            return std::nullopt;
        }
        out.push_back(x.get_num().get_si());
    }
    return EffectiveClass(std::move(out));
}

std::optional<EffectiveClass> gysin_preimage(const EffectiveClass& c, const LatticeMap& f)
{
    if (f.kind() != MapKind::gysin) {
        throw LatticeError("gysin_preimage needs a gysin map");
    }
    if (c.rank() != f.target_rank()) {
        throw LatticeError("class " + c.str() + " is not in the target of the gysin map");
    }
    for (const auto& fn : f.image_functionals()) {
        if (pair(fn, c) != 0) {
            return std::nullopt;
        }
    }
    return injective_preimage(c, f);
}

std::int64_t pair(const IntVector& functional, const IntVector& v)
{
    if (functional.size() != v.size()) {
        throw LatticeError("pairing a functional of length " + std::to_string(functional.size()) +
                           " with a class of rank " + std::to_string(v.size()));
    }
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += functional[i] * v[i];
    }
    return s;
}

} // namespace gwpt
