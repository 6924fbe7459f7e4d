#include "wst/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "wst/errors.hpp"

namespace wst {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string num, den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view p = body.substr(0, slash);
        std::string_view q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        num.assign(p);
        den.assign(q);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) {
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        }
        num = std::string(whole.empty() ? "0" : whole) + std::string(frac);
        den = "1" + std::string(frac.size(), '0');
    } else {
        if (!all_digits(body)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        num.assign(body);
    }

    // explicit base: the default of 0 would read zero-padded digits as octal
    Rational r{mpz_class(num, 10), mpz_class(den, 10)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

double to_double(const Rational& value) {
    return value.get_d();
}

Rational abs(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

Rational pow_int(const Rational& value, long exp) {
    if (exp == 0) return Rational(1);
    if (value == 0 && exp < 0) throw ZeroScalar("0 raised to a negative power");
    Rational base = exp < 0 ? Rational(Rational(1) / value) : value;
    unsigned long k = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational acc(1);
    while (k > 0) {
        if (k & 1UL) acc *= base;
        base *= base;
        k >>= 1UL;
    }
    return acc;
}

bool is_perfect_square(const Rational& value) {
    if (value < 0) return false;
    return mpz_perfect_square_p(value.get_num_mpz_t()) && mpz_perfect_square_p(value.get_den_mpz_t());
}

Rational sqrt_exact(const Rational& value) {
    if (value < 0) throw ZeroScalar("square root of a negative rational");
    if (!is_perfect_square(value)) {
        throw std::domain_error("rational " + to_string(value) + " is not a perfect square");
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
    return Rational(num, den);
}

}  // namespace wst
