#include "addcomb/rational.hpp"

#include <cctype>
#include <ostream>

namespace addcomb {

namespace {

bool scan_digits(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i > start;
}

std::size_t hash_mpz(mpz_srcptr z, std::size_t h) {
    constexpr std::size_t kPrime = 1099511628211ULL;
    h = (h ^ static_cast<std::size_t>(mpz_sgn(z))) * kPrime;
    std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i)
        h = (h ^ static_cast<std::size_t>(mpz_getlimbn(z, i))) * kPrime;
    return h;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    std::size_t num_begin = i;
    if (!scan_digits(text, i)) throw SyntaxError(i, "digit");
    Integer num(std::string(text.substr(num_begin, i - num_begin)), 10);
    Integer den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        if (!scan_digits(text, i)) throw SyntaxError(i, "digit");
        den = Integer(std::string(text.substr(den_begin, i - den_begin)), 10);
    }
    if (i != text.size()) throw SyntaxError(i, "end of input");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

std::size_t Rational::hash() const {
    std::size_t h = 1469598103934665603ULL;
    h = hash_mpz(mpq_numref(v_.get_mpq_t()), h);
    h = hash_mpz(mpq_denref(v_.get_mpq_t()), h);
    return h;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exp) {
    if (exp < 0) return pow(base.reciprocal(), -exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace addcomb
