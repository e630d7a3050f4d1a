#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "addcomb/errors.hpp"

namespace addcomb {

using Integer = mpz_class;

// Exact rational scalar. Invariants: fully reduced, denominator > 0,
// zero is canonically 0/1. All arithmetic is exact; division by zero
// throws ZeroDenominatorError.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    explicit Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (sgn(den) == 0) throw ZeroDenominatorError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Text grammar: optional leading '-', digits, optionally '/' and digits.
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    std::string str() const;

    Rational reciprocal() const {
        if (is_zero()) throw ZeroDenominatorError("reciprocal of zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    friend Rational operator-(const Rational& a) { return Rational(canonical{}, -a.v_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(canonical{}, a.v_ + b.v_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(canonical{}, a.v_ - b.v_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(canonical{}, a.v_ * b.v_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ZeroDenominatorError("division by zero");
        Rational r;
        mpq_div(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return r;
    }
    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const;

    const mpq_class& raw() const { return v_; }

private:
    struct canonical {};  // tag: the mpq is already in canonical form
    Rational(canonical, mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;
};

Rational abs(const Rational& r);

// base^exp with exp any integer; negative exponents require base != 0.
Rational pow(const Rational& base, long exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct RationalHash {
    std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace addcomb
