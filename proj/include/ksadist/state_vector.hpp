#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ksadist/errors.hpp"
#include "ksadist/scalar.hpp"

namespace ksadist {

/// Unnormalized pure state: a stable id plus dim scalar entries, at least one
/// nonzero. Scale and global phase are irrelevant everywhere; all predicates
/// built on top are scale-invariant.
template <typename S> struct StateVector {
    std::string id;
    std::vector<S> entries;

    StateVector() = default;
    StateVector(std::string id_, std::vector<S> entries_)
        : id(std::move(id_)), entries(std::move(entries_)) {
        bool nonzero = false;
        for (const S& e : entries)
            nonzero = nonzero || !e.is_zero();
        if (!nonzero)
            throw PreconditionError("state vector '" + id + "' has no nonzero entry");
    }

    int dim() const { return static_cast<int>(entries.size()); }
};

} // namespace ksadist
