#include "holant/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace holant {

namespace {

long double rat_to_ld(const BigRat& r) {
    return static_cast<long double>(boost::multiprecision::numerator(r)) /
           static_cast<long double>(boost::multiprecision::denominator(r));
}

long double cabs(long double re, long double im) { return std::hypot(re, im); }

}  // namespace

long double Scalar::approx_re() const { return exact_ ? rat_to_ld(re_) : are_; }
long double Scalar::approx_im() const { return exact_ ? rat_to_ld(im_) : aim_; }

Scalar Scalar::operator+(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(re_ + o.re_, im_ + o.im_);
    return approx(approx_re() + o.approx_re(), approx_im() + o.approx_im());
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(re_ - o.re_, im_ - o.im_);
    return approx(approx_re() - o.approx_re(), approx_im() - o.approx_im());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (exact_ && o.exact_)
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    const long double ar = approx_re(), ai = approx_im();
    const long double br = o.approx_re(), bi = o.approx_im();
    return approx(ar * br - ai * bi, ar * bi + ai * br);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    if (exact_ && o.exact_) {
        const BigRat n = o.re_ * o.re_ + o.im_ * o.im_;
        return Scalar((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
    }
    const long double br = o.approx_re(), bi = o.approx_im();
    const long double n = br * br + bi * bi;
    const long double ar = approx_re(), ai = approx_im();
    return approx((ar * br + ai * bi) / n, (ai * br - ar * bi) / n);
}

Scalar Scalar::operator-() const {
    if (exact_) return Scalar(-re_, -im_);
    return approx(-are_, -aim_);
}

bool Scalar::operator==(const Scalar& o) const {
    if (exact_ && o.exact_) return re_ == o.re_ && im_ == o.im_;
    const long double ar = approx_re(), ai = approx_im();
    const long double br = o.approx_re(), bi = o.approx_im();
    const long double diff = cabs(ar - br, ai - bi);
    const long double scale = std::max({1.0L, cabs(ar, ai), cabs(br, bi)});
    return diff <= kRelTol * scale;
}

bool Scalar::is_zero() const {
    if (exact_) return re_ == 0 && im_ == 0;
    return cabs(are_, aim_) <= kRelTol * std::max(1.0L, cabs(are_, aim_));
}

Scalar Scalar::conj() const {
    if (exact_) return Scalar(re_, -im_);
    return approx(are_, -aim_);
}

long double Scalar::abs_approx() const { return cabs(approx_re(), approx_im()); }

namespace {

std::string rat_str(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string ld_str(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.18Lg", v);
    return buf;
}

}  // namespace

std::string Scalar::str() const {
    if (exact_) {
        if (im_ == 0) return rat_str(re_);
        std::string s = rat_str(re_);
        s += (im_ < 0) ? "-" : "+";
        BigRat mag = im_ < 0 ? BigRat(-im_) : im_;
        s += rat_str(mag) + "i";
        return s;
    }
    if (aim_ == 0.0L) return "~" + ld_str(are_);
    std::string s = "~" + ld_str(are_);
    s += (aim_ < 0.0L) ? "-" : "+";
    s += ld_str(aim_ < 0.0L ? -aim_ : aim_) + "i";
    return s;
}

namespace {

// Grammar for exact values: [+-]?TERM([+-]TERM)? where TERM is "p", "p/q",
// "pi", "p/qi", or bare "i". Approximate values are the same shape with
// decimal literals after a leading "~".
struct Cursor {
    std::string_view s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    char take() { return s[pos++]; }
};

BigInt parse_int(Cursor& c) {
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.take();
    if (digits.empty()) throw ParseError("expected digits in scalar literal");
    return BigInt(digits);
}

// One signed term; returns (magnitude, is_imaginary).
std::pair<BigRat, bool> parse_exact_term(Cursor& c, int sign) {
    if (c.peek() == 'i') {
        c.take();
        return {BigRat(sign), true};
    }
    BigInt num = parse_int(c);
    BigInt den = 1;
    if (c.peek() == '/') {
        c.take();
        den = parse_int(c);
        if (den == 0) throw ParseError("zero denominator in scalar literal");
    }
    BigRat mag(num, den);
    if (sign < 0) mag = -mag;
    if (c.peek() == 'i') {
        c.take();
        return {mag, true};
    }
    return {mag, false};
}

Scalar parse_exact(std::string_view text) {
    Cursor c{text};
    BigRat re(0), im(0);
    bool seen_re = false, seen_im = false;
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') sign = (c.take() == '-') ? -1 : 1;
        auto [mag, imag] = parse_exact_term(c, sign);
        if (imag) {
            if (seen_im) throw ParseError("duplicate imaginary part");
            im = mag;
            seen_im = true;
        } else {
            if (seen_re) throw ParseError("duplicate real part");
            re = mag;
            seen_re = true;
        }
    }
    if (!seen_re && !seen_im) throw ParseError("empty scalar literal");
    return Scalar::rational(re, im);
}

long double parse_ld(Cursor& c, int sign) {
    size_t start = c.pos;
    while (!c.done()) {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == 'e' || ch == 'E') {
            c.take();
        } else if ((ch == '+' || ch == '-') && c.pos > start &&
                   (c.s[c.pos - 1] == 'e' || c.s[c.pos - 1] == 'E')) {
            c.take();
        } else {
            break;
        }
    }
    if (c.pos == start) throw ParseError("expected decimal literal");
    std::string lit(c.s.substr(start, c.pos - start));
    return sign * std::strtold(lit.c_str(), nullptr);
}

Scalar parse_approx(std::string_view text) {
    Cursor c{text};
    long double re = 0.0L, im = 0.0L;
    bool seen_re = false, seen_im = false;
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') sign = (c.take() == '-') ? -1 : 1;
        if (c.peek() == 'i') {
            c.take();
            im = sign;
            seen_im = true;
            continue;
        }
        long double v = parse_ld(c, sign);
        if (c.peek() == 'i') {
            c.take();
            if (seen_im) throw ParseError("duplicate imaginary part");
            im = v;
            seen_im = true;
        } else {
            if (seen_re) throw ParseError("duplicate real part");
            re = v;
            seen_re = true;
        }
    }
    if (!seen_re && !seen_im) throw ParseError("empty scalar literal");
    return Scalar::approx(re, im);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty scalar literal");
    if (text.front() == '~') return parse_approx(text.substr(1));
    return parse_exact(text);
}

Scalar nth_root_real(const BigRat& x, unsigned n) {
    if (x <= 0) throw NonPositiveRadicand();
    if (n == 0) throw DomainError("InvalidRootDegree", "root degree must be >= 1");
    const long double v = rat_to_ld(x);
    if (n == 1) return Scalar::approx(v);
    // Newton iteration on t^n - v, seeded by the libm estimate.
    long double t = std::pow(v, 1.0L / static_cast<long double>(n));
    for (int iter = 0; iter < 64; ++iter) {
        long double tn1 = 1.0L;
        for (unsigned k = 0; k + 1 < n; ++k) tn1 *= t;
        const long double next = ((n - 1) * t + v / tn1) / n;
        if (std::fabs(next - t) <= 1e-21L * std::fabs(next)) {
            t = next;
            break;
        }
        t = next;
    }
    return Scalar::approx(t);
}

}  // namespace holant
