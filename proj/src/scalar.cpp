#include "ksadist/scalar.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ksadist/errors.hpp"

namespace ksadist {

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2,  w^2 = -1 - w
    Rational a = a_ * o.a_ - b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_ - b_ * o.b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    return *this *= inverse(o);
}

Cyclotomic conj(const Cyclotomic& s) {
    // conj(w) = w^2 = -1 - w
    return {s.a() - s.b(), -s.b()};
}

Rational abs_squared(const Cyclotomic& s) {
    return s.a() * s.a() - s.a() * s.b() + s.b() * s.b();
}

Cyclotomic inverse(const Cyclotomic& s) {
    if (s.is_zero())
        throw PreconditionError("inverse of zero scalar");
    Rational n = abs_squared(s);
    Cyclotomic c = conj(s);
    return {c.a() / n, c.b() / n};
}

namespace {
std::atomic<double> g_float_eps{1e-9};
} // namespace

double float_eps() {
    return g_float_eps.load();
}

void set_float_eps(double eps) {
    if (!(eps > 0))
        throw PreconditionError("float tolerance must be positive");
    g_float_eps.store(eps);
}

bool FloatComplex::is_zero() const {
    return std::abs(z_) <= float_eps();
}

FloatComplex& FloatComplex::operator/=(const FloatComplex& o) {
    if (o.is_zero())
        throw PreconditionError("inverse of zero scalar");
    z_ /= o.z_;
    return *this;
}

FloatComplex conj(const FloatComplex& s) {
    return FloatComplex(std::conj(s.value()));
}

double abs_squared(const FloatComplex& s) {
    return std::norm(s.value());
}

FloatComplex inverse(const FloatComplex& s) {
    if (s.is_zero())
        throw PreconditionError("inverse of zero scalar");
    return FloatComplex(1.0 / s.value());
}

bool scalar_equal(const FloatComplex& x, const FloatComplex& y) {
    return std::abs(x.value() - y.value()) <= float_eps();
}

namespace {

// Scans one <rat> = -?digits(/digits)? starting at i; returns one-past-end.
std::size_t scan_rational(std::string_view t, std::size_t i) {
    std::size_t k = i;
    if (k < t.size() && t[k] == '-')
        ++k;
    std::size_t start = k;
    while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k])))
        ++k;
    if (k == start)
        throw InputError("invalid scalar '" + std::string(t) + "'");
    if (k < t.size() && t[k] == '/') {
        std::size_t dstart = ++k;
        while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k])))
            ++k;
        if (k == dstart)
            throw InputError("invalid scalar '" + std::string(t) + "'");
    }
    return k;
}

} // namespace

Cyclotomic parse_cyclotomic(std::string_view text) {
    if (text.empty())
        throw InputError("empty scalar");
    std::size_t end1 = scan_rational(text, 0);
    Rational first = Rational::parse(text.substr(0, end1));
    if (end1 == text.size())
        return {first, Rational(0)};
    if (text[end1] == 'w') {
        if (end1 + 1 != text.size())
            throw InputError("invalid scalar '" + std::string(text) + "'");
        return {Rational(0), first};
    }
    if (text[end1] != '+' && text[end1] != '-')
        throw InputError("invalid scalar '" + std::string(text) + "'");
    // second <rat> begins at the sign for '-', after it for '+'
    std::size_t second_start = text[end1] == '+' ? end1 + 1 : end1;
    std::size_t end2 = scan_rational(text, second_start);
    if (end2 + 1 != text.size() || text[end2] != 'w')
        throw InputError("invalid scalar '" + std::string(text) + "'");
    Rational second = Rational::parse(text.substr(second_start, end2 - second_start));
    return {first, second};
}

std::string to_string(const Cyclotomic& s) {
    if (s.b().is_zero())
        return s.a().str();
    std::string bs = s.b().str() + "w";
    if (s.a().is_zero())
        return bs;
    return s.b().sign() > 0 ? s.a().str() + "+" + bs : s.a().str() + bs;
}

FloatComplex parse_float_complex(std::string_view text) {
    std::string t(text);
    double re = 0, im = 0;
    int consumed = 0;
    if (std::sscanf(t.c_str(), " ( %lf , %lf ) %n", &re, &im, &consumed) != 2 ||
        static_cast<std::size_t>(consumed) != t.size())
        throw InputError("invalid float entry '" + t + "', expected (re,im)");
    return {re, im};
}

std::string to_string(const FloatComplex& s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", s.value().real(), s.value().imag());
    return buf;
}

} // namespace ksadist
