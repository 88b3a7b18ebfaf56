#ifndef SUPERCODIM_REAL_HPP
#define SUPERCODIM_REAL_HPP

#include <mpfr.h>

#include <string>

#include "supercodim/rational.hpp"

namespace supercodim {

/// Owning wrapper around an MPFR value with a fixed working precision.
///
/// Every value also carries a bound on its relative error, expressed as a
/// power of two: |value - exact| <= 2^error_exponent * |exact|. The bound is
/// propagated conservatively by the arithmetic below and is what report
/// comparisons use to decide ties.
class Real {
public:
    explicit Real(unsigned precision_bits = 128);
    Real(const Rational& q, unsigned precision_bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real zero(unsigned precision_bits) { return Real(precision_bits); }
    static Real one(unsigned precision_bits);

    unsigned precision() const noexcept { return precision_; }
    /// log2 of the relative error bound.
    long error_exponent() const noexcept { return error_exponent_; }
    /// Replaces the error bound (used when restoring serialized values).
    void set_error_exponent(long e) noexcept { error_exponent_ = e; }

    /// Principal real m-th root, m >= 1; value must be non-negative.
    Real root(unsigned long m) const;
    Real operator*(const Real& other) const;

    bool is_zero() const;
    double to_double() const;
    /// Fixed-point rendering with `digits` significant decimal digits.
    std::string to_string(int digits = 30) const;

    /// Three-way comparison honoring error bounds: returns 0 when the values
    /// are within max(error bounds, 2^-tie_bits) relative to each other.
    friend int compare(const Real& a, const Real& b, unsigned tie_bits);
    friend int compare(const Real& a, const Rational& b, unsigned tie_bits);

    mpfr_srcptr get() const noexcept { return value_; }

private:
    mpfr_t value_;
    unsigned precision_;
    long error_exponent_;
};

}  // namespace supercodim

#endif
