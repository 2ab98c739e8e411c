#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace predsched {

/// Exact arbitrary-precision rational, always kept in canonical form
/// (positive denominator, coprime numerator/denominator).
///
/// Text form is "a/b" with the sign on the numerator; integers render
/// without the "/b" part. parse() accepts the same forms plus surrounding
/// whitespace.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] mpz_class floor() const;
    [[nodiscard]] mpz_class ceil() const;
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Least common multiple of the denominators; used to scale a set of
/// rationals onto a common integer grid.
mpz_class common_denominator(const Rational* first, const Rational* last);

/// Twelve significant digits, for plot columns only.
std::string format_float(const Rational& r);

}  // namespace predsched

template <>
struct std::hash<predsched::Rational> {
    std::size_t operator()(const predsched::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
