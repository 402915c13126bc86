#include "ksadist/antidist.hpp"

#include <algorithm>

namespace ksadist {

bool triple_criterion(const Rational& d1, const Rational& d2, const Rational& d3) {
    for (const Rational* d : {&d1, &d2, &d3})
        if (*d < Rational(0) || *d > Rational(1))
            throw PreconditionError("overlaps must lie in [0,1]");
    Rational sum = d1 + d2 + d3;
    if (!(sum < Rational(1)))
        return false;
    Rational lhs = (sum - Rational(1)) * (sum - Rational(1));
    Rational rhs = Rational(4) * d1 * d2 * d3;
    return lhs >= rhs;
}

bool triple_criterion(double d1, double d2, double d3) {
    auto clamp01 = [](double d) {
        if (d < -float_eps() || d > 1.0 + float_eps())
            throw PreconditionError("overlaps must lie in [0,1]");
        return std::clamp(d, 0.0, 1.0);
    };
    double a = clamp01(d1), b = clamp01(d2), c = clamp01(d3);
    double sum = a + b + c;
    return sum < 1.0 && (sum - 1.0) * (sum - 1.0) >= 4.0 * a * b * c;
}

} // namespace ksadist
