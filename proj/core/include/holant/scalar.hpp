#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holant {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Base class for every domain error thrown by the library. Each error site
/// carries a stable machine-readable code next to the human message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class DivisionByZero : public DomainError {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero")
        : DomainError("DivisionByZero", msg) {}
};

class NonPositiveRadicand : public DomainError {
public:
    explicit NonPositiveRadicand(const std::string& msg = "radicand must be positive")
        : DomainError("NonPositiveRadicand", msg) {}
};

class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& msg) : DomainError("ParseError", msg) {}
};

/// Relative tolerance used whenever an approximate value takes part in a
/// comparison: |a - b| <= kRelTol * max(1, |a|, |b|).
inline constexpr long double kRelTol = 1e-9L;

/// A complex number, either an exact Gaussian rational or a high-precision
/// floating approximation (long double carries a 64-bit mantissa on x86-64).
///
/// Exact arithmetic is closed under +, -, *, and division by nonzero values.
/// Mixing an exact operand with an approximate one promotes the result to
/// approximate. Scalars are immutable values and freely shareable.
class Scalar {
public:
    /// Exact zero.
    Scalar() : exact_(true), re_(0), im_(0), are_(0.0L), aim_(0.0L) {}

    static Scalar integer(long long n) { return Scalar(BigRat(n), BigRat(0)); }
    static Scalar rational(BigRat re, BigRat im = BigRat(0)) {
        return Scalar(std::move(re), std::move(im));
    }
    static Scalar approx(long double re, long double im = 0.0L) {
        Scalar s;
        s.exact_ = false;
        s.are_ = re;
        s.aim_ = im;
        return s;
    }
    /// The imaginary unit, exact.
    static Scalar i() { return Scalar(BigRat(0), BigRat(1)); }

    bool exact() const { return exact_; }

    /// Exact components; only valid when exact() holds.
    const BigRat& re() const { return re_; }
    const BigRat& im() const { return im_; }

    /// Floating view of the value (lossless for approximate scalars,
    /// a long double rounding of the rational components otherwise).
    long double approx_re() const;
    long double approx_im() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Exact complex division; throws DivisionByZero when o is zero.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Equality per the comparison contract: exact vs exact compares the
    /// rationals, any approximate operand switches to the relative-tolerance
    /// test with kRelTol.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// True iff the value equals zero under the comparison contract.
    bool is_zero() const;

    Scalar conj() const;
    /// Floating modulus |a|.
    long double abs_approx() const;

    /// Drop exactness; the value becomes an approximate scalar.
    Scalar to_approx() const { return approx(approx_re(), approx_im()); }

    /// Textual form: exact values as "p/q" / "p/q+r/si" (the "/1" denominator
    /// is omitted), approximate values as decimal literals prefixed by "~".
    std::string str() const;
    /// Inverse of str(); also accepts bare imaginary forms like "i", "-3i".
    static Scalar parse(std::string_view text);

private:
    Scalar(BigRat re, BigRat im)
        : exact_(true), re_(std::move(re)), im_(std::move(im)), are_(0.0L), aim_(0.0L) {}

    bool exact_;
    BigRat re_, im_;
    long double are_, aim_;
};

inline Scalar operator*(long long n, const Scalar& s) { return Scalar::integer(n) * s; }

/// Positive real n-th root of a positive rational, as an approximate scalar
/// accurate well below kRelTol. Throws NonPositiveRadicand for x <= 0.
Scalar nth_root_real(const BigRat& x, unsigned n);

}  // namespace holant
