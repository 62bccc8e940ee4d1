#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polysite/errors.hpp"

namespace polysite {

using VectorN = std::vector<double>;

// y split into a component inside a subspace and the orthogonal remainder:
// y = projection + complement.
struct Decomposition {
    VectorN projection;  // lies in the span of the basis
    VectorN complement;  // orthogonal to every basis vector
};

inline double dot(const VectorN& a, const VectorN& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

// Orthogonal projection of y onto the span of a pairwise-orthogonal basis:
// sum over j of (y.u_j)/(u_j.u_j) u_j. The basis must not contain zero
// vectors and every vector must match y's dimension.
inline Decomposition project_onto_basis(const VectorN& y, const std::vector<VectorN>& basis) {
    Decomposition out;
    out.projection.assign(y.size(), 0.0);
    for (const VectorN& u : basis) {
        const double uu = dot(u, u);
        if (uu == 0.0) {
            throw ZeroBasisVector("project_onto_basis: basis contains the zero vector");
        }
        const double coeff = dot(y, u) / uu;
        for (std::size_t i = 0; i < y.size(); ++i) {
            out.projection[i] += coeff * u[i];
        }
    }
    out.complement.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out.complement[i] = y[i] - out.projection[i];
    }
    return out;
}

}  // namespace polysite
