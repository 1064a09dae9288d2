#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gwpt {

using Rational = mpq_class;

// Parses "p", "-p/q" or "p/q"; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Element a + b*i of Q(i). All engine arithmetic happens here.
class GaussianRational {
public:
    GaussianRational() = default;
    template <std::integral T>
    GaussianRational(T value) : re_(static_cast<long>(value)) {}
    GaussianRational(Rational re, Rational im = 0);

    static GaussianRational i() { return GaussianRational(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
    // Throws InversionError on zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // "3/4", "-i", "1/2-3i", ...
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

// z^n for any integer n (negative powers invert).
GaussianRational pow(const GaussianRational& z, std::int64_t n);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace gwpt
