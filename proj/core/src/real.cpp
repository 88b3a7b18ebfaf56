#include "supercodim/real.hpp"

#include <algorithm>
#include <utility>

#include "supercodim/errors.hpp"

namespace supercodim {

namespace {

// Relative error of one correctly rounded operation at precision p is 2^-p;
// two such errors combine to at most 2^(1-p) (+ second order, absorbed by
// the extra bit).
long add_error(long a, long b) { return std::max(a, b) + 1; }

}  // namespace

Real::Real(unsigned precision_bits) : precision_(precision_bits) {
    if (precision_bits < MPFR_PREC_MIN) throw PreconditionError("precision too small");
    mpfr_init2(value_, precision_bits);
    mpfr_set_zero(value_, 1);
    error_exponent_ = -static_cast<long>(precision_bits);
}

Real::Real(const Rational& q, unsigned precision_bits) : Real(precision_bits) {
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

Real Real::one(unsigned precision_bits) {
    Real r(precision_bits);
    mpfr_set_ui(r.value_, 1, MPFR_RNDN);
    return r;
}

Real::Real(const Real& other)
    : precision_(other.precision_), error_exponent_(other.error_exponent_) {
    mpfr_init2(value_, precision_);
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
    : precision_(other.precision_), error_exponent_(other.error_exponent_) {
    mpfr_init2(value_, precision_);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision_);
        mpfr_set(value_, other.value_, MPFR_RNDN);
        precision_ = other.precision_;
        error_exponent_ = other.error_exponent_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    std::swap(precision_, other.precision_);
    std::swap(error_exponent_, other.error_exponent_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::root(unsigned long m) const {
    if (m == 0) throw PreconditionError("root of order zero");
    if (mpfr_sgn(value_) < 0) throw PreconditionError("root of a negative value");
    Real out(precision_);
    mpfr_rootn_ui(out.value_, value_, m, MPFR_RNDN);
    // An input relative error e becomes roughly e/m after the root.
    out.error_exponent_ = add_error(error_exponent_, -static_cast<long>(precision_));
    return out;
}

Real Real::operator*(const Real& other) const {
    const unsigned prec = std::min(precision_, other.precision_);
    Real out(prec);
    mpfr_mul(out.value_, value_, other.value_, MPFR_RNDN);
    out.error_exponent_ =
        add_error(add_error(error_exponent_, other.error_exponent_), -static_cast<long>(prec));
    return out;
}

bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Real::to_string(int digits) const {
    if (mpfr_zero_p(value_)) return "0";
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

int compare(const Real& a, const Real& b, unsigned tie_bits) {
    const unsigned prec = std::max(a.precision_, b.precision_) + 8;
    mpfr_t diff, scale;
    mpfr_init2(diff, prec);
    mpfr_init2(scale, prec);
    mpfr_sub(diff, a.value_, b.value_, MPFR_RNDN);
    mpfr_abs(scale, a.value_, MPFR_RNDN);
    if (mpfr_cmpabs(b.value_, a.value_) > 0) mpfr_abs(scale, b.value_, MPFR_RNDN);
    const long slack = std::max({a.error_exponent_ + 1, b.error_exponent_ + 1,
                                 -static_cast<long>(tie_bits)});
    mpfr_mul_2si(scale, scale, slack, MPFR_RNDU);
    int out = 0;
    if (mpfr_cmpabs(diff, scale) > 0) out = mpfr_sgn(diff) > 0 ? 1 : -1;
    mpfr_clear(diff);
    mpfr_clear(scale);
    return out;
}

int compare(const Real& a, const Rational& b, unsigned tie_bits) {
    Real exact(b, a.precision_ + 64);
    return compare(a, exact, tie_bits);
}

}  // namespace supercodim
