#pragma once

#include <random>
#include <string>
#include <vector>

#include "ksadist/algebra.hpp"
#include "ksadist/scenario.hpp"

namespace ksadist::test {

inline StateVector<Cyclotomic> vec(const std::string& id,
                                   const std::vector<std::string>& entries) {
    std::vector<Cyclotomic> es;
    es.reserve(entries.size());
    for (const auto& e : entries)
        es.push_back(parse_cyclotomic(e));
    return {id, std::move(es)};
}

inline StateVector<Cyclotomic> ivec(const std::string& id, const std::vector<long>& entries) {
    std::vector<Cyclotomic> es;
    es.reserve(entries.size());
    for (long e : entries)
        es.push_back(Cyclotomic(e));
    return {id, std::move(es)};
}

inline Pool<Cyclotomic> ipool(int dim, const std::vector<std::vector<long>>& vecs) {
    Pool<Cyclotomic> p(dim);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        p.push(ivec("v" + std::to_string(i), vecs[i]));
    return p;
}

inline Rational rat(const std::string& s) {
    return Rational::parse(s);
}

/// Random small cyclotomic scalar; nonzero when requested.
inline Cyclotomic random_scalar(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        Cyclotomic s(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        if (!nonzero || !s.is_zero())
            return s;
    }
}

inline StateVector<Cyclotomic> random_vector(std::mt19937& rng, int dim, const std::string& id) {
    while (true) {
        std::vector<Cyclotomic> es;
        for (int k = 0; k < dim; ++k)
            es.push_back(random_scalar(rng));
        bool zero = true;
        for (const auto& e : es)
            zero = zero && e.is_zero();
        if (!zero)
            return {id, std::move(es)};
    }
}

/// Exact d x d matrix over Q(w) as nested vectors; used to check that the
/// rank-1 projectors of a context sum to the identity.
inline std::vector<std::vector<Cyclotomic>> projector_sum(
    const std::vector<StateVector<Cyclotomic>>& vectors) {
    int d = vectors.at(0).dim();
    std::vector<std::vector<Cyclotomic>> m(d, std::vector<Cyclotomic>(d));
    for (const auto& v : vectors) {
        Rational n = norm_squared(v);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m[r][c] += v.entries[r] * conj(v.entries[c]) / Cyclotomic(n);
    }
    return m;
}

inline bool is_identity(const std::vector<std::vector<Cyclotomic>>& m) {
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (m[r][c] != Cyclotomic(r == c ? 1 : 0))
                return false;
    return true;
}

} // namespace ksadist::test
