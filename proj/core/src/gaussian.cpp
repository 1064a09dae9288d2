#include "gwpt/gaussian.hpp"

#include <ostream>

#include "gwpt/error.hpp"

namespace gwpt {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (!s.empty() && s.front() == '+') {
        s.erase(0, 1);
    }
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw Error("malformed rational literal '" + std::string(text) + "'");
    }
    if (r.get_den() == 0) {
        throw Error("zero denominator in rational literal '" + std::string(text) + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) {
        throw InversionError("division by zero in Q(i)");
    }
    const Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) {
            throw InversionError("division by zero in Q(i)");
        }
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::str() const
{
    if (sgn(im_) == 0) {
        return to_string(re_);
    }
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = to_string(im_) + "i";
    }
    if (sgn(re_) == 0) {
        return imag;
    }
    return to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

GaussianRational pow(const GaussianRational& z, std::int64_t n)
{
    if (n < 0) {
        return pow(z.inverse(), -n);
    }
    GaussianRational result(1);
    GaussianRational base = z;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

} // namespace gwpt
