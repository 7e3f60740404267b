#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linset/field.hpp"

namespace linset {

/// Point of PG(n−1, ·): nonzero homogeneous coordinates normalized so the
/// first nonzero coordinate is one. Equality is coefficient-wise.
struct Point {
    std::vector<FieldElement> v;
    friend bool operator==(const Point&, const Point&) = default;
};

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::size_t h = 1469598103934665603ull;
        for (FieldElement x : p.v) {
            h ^= x.idx;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Subspace in reduced row-echelon form over the declared field; projective
/// dimension = rank − 1, the empty subspace (rank 0) is allowed.
struct Subspace {
    std::vector<std::vector<FieldElement>> rows;
    unsigned coords = 0;
    unsigned rank() const { return static_cast<unsigned>(rows.size()); }
    int proj_dim() const { return static_cast<int>(rows.size()) - 1; }
    friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Exact projective geometry PG(coords−1, F) with canonical points and
/// RREF-canonical subspaces. Meets go through kernels of stacked duals, so
/// nothing ever enumerates q^h-sized point sets.
class Geometry {
public:
    Geometry(const Field& F, unsigned coords);

    const Field& field() const { return *F_; }
    unsigned coords() const { return coords_; }

    Point point(std::vector<FieldElement> v) const;  // normalizes; ZeroVector
    std::vector<FieldElement> unit_vector(unsigned j) const;

    Subspace empty_subspace() const { return Subspace{{}, coords_}; }
    Subspace full_space() const;
    Subspace subspace(std::vector<std::vector<FieldElement>> rows) const;  // RREF
    Subspace span(const Subspace& a, const Subspace& b) const;            // AmbientMismatch
    Subspace span_point(const Subspace& a, const Point& p) const;
    Subspace meet(const Subspace& a, const Subspace& b) const;
    Subspace dual(const Subspace& a) const;  // annihilator under the dot form
    bool contains(const Subspace& a, const Point& p) const;

    /// Unique point of `target` on ⟨axis, p⟩. Requires p ∉ axis,
    /// axis ∩ target = ∅ and dim axis + dim target = ambient − 1.
    Point project(const Point& p, const Subspace& axis, const Subspace& target) const;

    /// All coordinates in F_q after normalization.
    bool in_canonical_subgeometry(const Point& p) const;

    std::vector<Point> all_points() const;
    std::vector<Point> subgeometry_points() const;

private:
    void check_ambient(unsigned c) const;
    const Field* F_;
    unsigned coords_;
};

/// Field reduction: the (h−1)-dimensional F_q-subspace of PG(r·h−1, q)
/// spanned by the F_q-expansions of all F_{q^h}-multiples of a representative
/// vector. Entries of the result lie in F_q.
Subspace field_reduce(const Field& F, const Point& p);

/// F_q-span of the expansions of the given vectors (e.g. a basis of U),
/// as a subspace of PG(r·h−1, q).
Subspace field_reduce_span(const Field& F, std::span<const std::vector<FieldElement>> vectors);

/// Cross-ratio of four pairwise distinct points of PG(1, q^h); the result
/// type distinguishes ∞ from field values (for distinct points the value is
/// always finite and outside {0, 1}).
struct CrossRatio {
    bool infinite = false;
    FieldElement value{};
    friend bool operator==(const CrossRatio&, const CrossRatio&) = default;
};

CrossRatio cross_ratio(const Field& F, const Point& p1, const Point& p2, const Point& p3,
                       const Point& p4);  // NotDistinct

/// The six values of the cross-ratio under reordering of the four points.
std::vector<CrossRatio> cross_ratio_orbit(const Field& F, CrossRatio r);

}  // namespace linset
