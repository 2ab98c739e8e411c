#include "predsched/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "predsched/error.hpp"

namespace predsched {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw InvalidInput("rational: empty integer part");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw InvalidInput("rational: unexpected character in '" + std::string(s) + "'");
        }
    }
    // mpz_class rejects a leading '+'.
    const std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidInput("rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw InvalidInput("rational: empty string");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, true));
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), true);
    const mpz_class den = parse_integer(trim(s.substr(slash + 1)), false);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

mpz_class common_denominator(const Rational* first, const Rational* last) {
    mpz_class l = 1;
    for (; first != last; ++first) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), first->raw().get_den_mpz_t());
    }
    return l;
}

std::string format_float(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
    return buf;
}

}  // namespace predsched
