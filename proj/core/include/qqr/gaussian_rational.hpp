#pragma once

#include <gmpxx.h>

#include <string>

#include "qqr/errors.hpp"

namespace qqr {

/// Element of Q(i): exact rational real and imaginary parts, no rounding
/// anywhere. mpq_class keeps both parts canonical.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const mpq_class& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long r) : re(r), im(0) {}              // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_integer() const { return im == 0 && re.get_den() == 1; }

    GaussianRational conj() const { return {re, mpq_class(-im)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        const mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw Error("GaussianRational: division by zero");
        const mpq_class n = o.re * o.re + o.im * o.im;
        const mpq_class r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {mpq_class(-a.re), mpq_class(-a.im)};
    }

    bool operator==(const GaussianRational&) const = default;

    std::string str() const;
};

}  // namespace qqr
