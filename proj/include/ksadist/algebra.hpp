#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksadist/state_vector.hpp"

namespace ksadist {

template <typename S>
S inner_product(const StateVector<S>& u, const StateVector<S>& v) {
    if (u.dim() != v.dim())
        throw PreconditionError("inner product of vectors with dimensions " +
                                std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
    S acc{};
    for (int i = 0; i < u.dim(); ++i)
        acc += conj(u.entries[i]) * v.entries[i];
    return acc;
}

template <typename S> bool orthogonal(const StateVector<S>& u, const StateVector<S>& v) {
    return inner_product(u, v).is_zero();
}

template <typename S>
typename scalar_traits<S>::real norm_squared(const StateVector<S>& u) {
    typename scalar_traits<S>::real acc{};
    for (const S& e : u.entries)
        acc += abs_squared(e);
    return acc;
}

/// |<u,v>|^2 / (<u,u><v,v>), in [0,1]; invariant under scaling either vector.
template <typename S>
typename scalar_traits<S>::real overlap(const StateVector<S>& u, const StateVector<S>& v) {
    auto nu = norm_squared(u);
    auto nv = norm_squared(v);
    return abs_squared(inner_product(u, v)) / (nu * nv);
}

/// Deterministic representative of the ray through u: all entries divided by
/// the first nonzero one. u and v are scalar multiples iff they canonicalize
/// entrywise equal.
template <typename S> StateVector<S> canonicalize(const StateVector<S>& u) {
    int lead = -1;
    for (int i = 0; i < u.dim(); ++i) {
        if (!u.entries[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead < 0)
        throw PreconditionError("cannot canonicalize a zero vector");
    S inv = inverse(u.entries[lead]);
    std::vector<S> out(u.entries.size());
    for (int i = 0; i < u.dim(); ++i)
        out[i] = u.entries[i].is_zero() ? S{} : inv * u.entries[i];
    out[lead] = S{1}; // exact one, avoids residual roundoff in float
    StateVector<S> res;
    res.id = u.id;
    res.entries = std::move(out);
    return res;
}

template <typename S> bool entries_equal(const StateVector<S>& u, const StateVector<S>& v) {
    if (u.dim() != v.dim())
        return false;
    for (int i = 0; i < u.dim(); ++i)
        if (!scalar_equal(u.entries[i], v.entries[i]))
            return false;
    return true;
}

/// Same projector test: canonical forms compare entrywise equal.
template <typename S> bool same_ray(const StateVector<S>& u, const StateVector<S>& v) {
    if (u.dim() != v.dim())
        return false;
    return entries_equal(canonicalize(u), canonicalize(v));
}

namespace detail {

template <typename S> double pivot_score(const S& s) {
    if constexpr (scalar_traits<S>::exact)
        return s.is_zero() ? 0.0 : 1.0;
    else
        return std::abs(s.value());
}

/// In-place reduced row echelon form; returns pivot column per row-rank order.
template <typename S> std::vector<int> rref(std::vector<std::vector<S>>& rows, int dim) {
    std::vector<int> pivots;
    int r = 0;
    int m = static_cast<int>(rows.size());
    for (int c = 0; c < dim && r < m; ++c) {
        int best = -1;
        double best_score = 0;
        for (int rr = r; rr < m; ++rr) {
            double sc = pivot_score(rows[rr][c]);
            if (sc > best_score) {
                best_score = sc;
                best = rr;
            }
        }
        if (best < 0)
            continue;
        std::swap(rows[r], rows[best]);
        S inv = inverse(rows[r][c]);
        for (int k = 0; k < dim; ++k)
            rows[r][k] *= inv;
        rows[r][c] = S{1};
        for (int rr = 0; rr < m; ++rr) {
            if (rr == r || rows[rr][c].is_zero())
                continue;
            S f = rows[rr][c];
            for (int k = 0; k < dim; ++k)
                rows[rr][k] -= f * rows[r][k];
            rows[rr][c] = S{};
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Rescales exact vectors to clear denominators; no-op for the float backend.
template <typename S> void clear_denominators(std::vector<S>& entries) {
    if constexpr (scalar_traits<S>::exact) {
        mpz_class lcm(1);
        for (const Cyclotomic& e : entries) {
            mpz_class tmp;
            mpz_lcm(tmp.get_mpz_t(), lcm.get_mpz_t(), e.a().denominator().get_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), tmp.get_mpz_t(), e.b().denominator().get_mpz_t());
        }
        if (lcm == 1)
            return;
        Cyclotomic f{Rational(mpq_class(lcm))};
        for (Cyclotomic& e : entries)
            e *= f;
    } else {
        (void)entries;
    }
}

} // namespace detail

/// Rank of the span of the given vectors (exact for the cyclotomic backend).
template <typename S> int matrix_rank(std::span<const StateVector<S>> vectors, int dim) {
    std::vector<std::vector<S>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.dim() != dim)
            throw PreconditionError("rank: vector dimension mismatch");
        rows.push_back(v.entries);
    }
    return static_cast<int>(detail::rref(rows, dim).size());
}

/// Solves <v_j, x> = 0 for all j; returns the solution ray when the null
/// space is exactly one-dimensional, nullopt otherwise.
template <typename S>
std::optional<std::vector<S>> null_ray(std::span<const StateVector<S>> vectors, int dim) {
    std::vector<std::vector<S>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.dim() != dim)
            throw PreconditionError("null space: vector dimension mismatch");
        std::vector<S> row(v.entries.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            row[k] = conj(v.entries[k]);
        rows.push_back(std::move(row));
    }
    std::vector<int> pivots = detail::rref(rows, dim);
    if (static_cast<int>(pivots.size()) != dim - 1)
        return std::nullopt;
    int free_col = 0;
    for (int c = 0, p = 0; c < dim; ++c) {
        if (p < static_cast<int>(pivots.size()) && pivots[p] == c)
            ++p;
        else
            free_col = c;
    }
    std::vector<S> x(dim, S{});
    x[free_col] = S{1};
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = -rows[r][free_col];
    detail::clear_denominators(x);
    return x;
}

/// Unique (up to scale) vector orthogonal to d-1 mutually orthogonal vectors
/// in dimension d, canonicalized.
template <typename S>
StateVector<S> orthogonal_completion(std::span<const StateVector<S>> vs, int dim,
                                     std::string id = "completion") {
    if (static_cast<int>(vs.size()) != dim - 1)
        throw PreconditionError("orthogonal completion needs exactly dim-1 vectors, got " +
                                std::to_string(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!orthogonal(vs[i], vs[j]))
                throw PreconditionError("orthogonal completion: inputs '" + vs[i].id + "' and '" +
                                        vs[j].id + "' are not orthogonal");
    auto x = null_ray(vs, dim);
    if (!x)
        throw PreconditionError("orthogonal completion: inputs are linearly dependent");
    return canonicalize(StateVector<S>(std::move(id), std::move(*x)));
}

/// Unnormalized Gram-Schmidt basis of span(spanning); output size equals the
/// rank. Every output lies in the span, so it inherits orthogonality to any
/// state the spanned projector annihilates.
template <typename S>
std::vector<StateVector<S>> fine_grain(std::span<const StateVector<S>> spanning) {
    if (spanning.empty())
        throw PreconditionError("fine grain of an empty spanning set");
    int dim = spanning[0].dim();
    std::vector<StateVector<S>> basis;
    for (const auto& v : spanning) {
        if (v.dim() != dim)
            throw PreconditionError("fine grain: vector dimension mismatch");
        std::vector<S> w = v.entries;
        for (const auto& b : basis) {
            S num{};
            typename scalar_traits<S>::real den{};
            for (int k = 0; k < dim; ++k) {
                num += conj(b.entries[k]) * w[k];
                den += abs_squared(b.entries[k]);
            }
            S coeff = num / S{den};
            for (int k = 0; k < dim; ++k)
                w[k] -= coeff * b.entries[k];
        }
        bool zero = true;
        for (const S& e : w)
            zero = zero && e.is_zero();
        if (zero)
            continue;
        detail::clear_denominators(w);
        StateVector<S> out;
        out.id = v.id;
        out.entries = std::move(w);
        basis.push_back(std::move(out));
    }
    return basis;
}

} // namespace ksadist
