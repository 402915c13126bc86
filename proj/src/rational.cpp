#include "ksadist/rational.hpp"

#include <cctype>
#include <ostream>

#include "ksadist/errors.hpp"

namespace ksadist {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0)
        throw PreconditionError("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0)
        throw PreconditionError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // grammar: -?digits(/digits)?
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t k = start;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
            ++k;
        return k;
    };
    if (i < text.size() && text[i] == '-')
        ++i;
    std::size_t num_end = digits(i);
    if (num_end == i)
        throw InputError("invalid rational '" + std::string(text) + "'");
    i = num_end;
    if (i < text.size()) {
        if (text[i] != '/')
            throw InputError("invalid rational '" + std::string(text) + "'");
        std::size_t den_end = digits(i + 1);
        if (den_end == i + 1 || den_end != text.size())
            throw InputError("invalid rational '" + std::string(text) + "'");
        std::string den(text.substr(i + 1, den_end - i - 1));
        if (mpz_class(den) == 0)
            throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q{std::string(text)};
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return q_.get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw PreconditionError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
}

} // namespace ksadist
