#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "ksadist/rational.hpp"

namespace ksadist {

/// Element of Q(w), w = e^{2*pi*i/3}, stored as a + b*w with rational a, b.
/// Closed under +, -, *, /, conjugation; |a+bw|^2 = a^2 - a*b + b^2.
class Cyclotomic {
  public:
    Cyclotomic() = default;
    Cyclotomic(long n) : a_(n) {} // NOLINT: implicit by design
    Cyclotomic(Rational re) : a_(std::move(re)) {}
    Cyclotomic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyclotomic omega() { return {Rational(0), Rational(1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Cyclotomic operator-() const { return {-a_, -b_}; }
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o); // throws on zero divisor

    friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
    friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
    friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
    friend Cyclotomic operator/(Cyclotomic x, const Cyclotomic& y) { return x /= y; }

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

  private:
    Rational a_, b_;
};

Cyclotomic conj(const Cyclotomic& s);
Rational abs_squared(const Cyclotomic& s);
Cyclotomic inverse(const Cyclotomic& s);

/// Complex floating-point scalar with a module-level zero tolerance.
class FloatComplex {
  public:
    FloatComplex() = default;
    FloatComplex(double re) : z_(re) {} // NOLINT: implicit by design
    FloatComplex(double re, double im) : z_(re, im) {}
    explicit FloatComplex(std::complex<double> z) : z_(z) {}

    std::complex<double> value() const { return z_; }
    bool is_zero() const;

    FloatComplex operator-() const { return FloatComplex(-z_); }
    FloatComplex& operator+=(const FloatComplex& o) { z_ += o.z_; return *this; }
    FloatComplex& operator-=(const FloatComplex& o) { z_ -= o.z_; return *this; }
    FloatComplex& operator*=(const FloatComplex& o) { z_ *= o.z_; return *this; }
    FloatComplex& operator/=(const FloatComplex& o);

    friend FloatComplex operator+(FloatComplex x, const FloatComplex& y) { return x += y; }
    friend FloatComplex operator-(FloatComplex x, const FloatComplex& y) { return x -= y; }
    friend FloatComplex operator*(FloatComplex x, const FloatComplex& y) { return x *= y; }
    friend FloatComplex operator/(FloatComplex x, const FloatComplex& y) { return x /= y; }

  private:
    std::complex<double> z_{};
};

FloatComplex conj(const FloatComplex& s);
double abs_squared(const FloatComplex& s);
FloatComplex inverse(const FloatComplex& s);

/// Zero tolerance for the float backend (default 1e-9). Orthogonality and
/// dedup tests on float vectors compare against this.
double float_eps();
void set_float_eps(double eps);

/// Scalar text grammar:  <rat> | <rat>w | <rat>+<rat>w | <rat>-<rat>w
/// where <rat> is -?digits(/digits)?; float entries are "(re,im)".
Cyclotomic parse_cyclotomic(std::string_view text);
std::string to_string(const Cyclotomic& s);
FloatComplex parse_float_complex(std::string_view text);
std::string to_string(const FloatComplex& s);

inline bool scalar_equal(const Cyclotomic& x, const Cyclotomic& y) { return x == y; }
bool scalar_equal(const FloatComplex& x, const FloatComplex& y);

template <typename S> struct scalar_traits;

template <> struct scalar_traits<Cyclotomic> {
    using real = Rational;
    static constexpr const char* field_name = "cyclotomic3";
    static constexpr bool exact = true;
    static Cyclotomic parse(std::string_view t) { return parse_cyclotomic(t); }
};

template <> struct scalar_traits<FloatComplex> {
    using real = double;
    static constexpr const char* field_name = "float";
    static constexpr bool exact = false;
    static FloatComplex parse(std::string_view t) { return parse_float_complex(t); }
};

} // namespace ksadist
