#include "supercodim/rational.hpp"

#include <cctype>

namespace supercodim {

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                            : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den)) return false;
    if (den.front() == '-' || den.front() == '+') return false;
    if (num.front() == '+') num.remove_prefix(1);
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) return false;
    out = Rational(p, q);
    out.canonicalize();
    return true;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer pow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

}  // namespace supercodim
