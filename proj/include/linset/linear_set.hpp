#pragma once

#include <memory>
#include <span>
#include <vector>

#include "linset/bigint.hpp"
#include "linset/field.hpp"
#include "linset/poly.hpp"
#include "linset/projective.hpp"

namespace linset {

/// Parameters of one construction: the tower, the degree-s element α, and the
/// partition t_1..t_{l+1} of k. The partition keeps its original order for
/// coordinate output; prediction formulas sort a copy.
struct ConstructionSpec {
    std::shared_ptr<const Field> field;
    unsigned s = 0;
    FieldElement alpha{};
    std::vector<unsigned> partition;

    unsigned l() const { return static_cast<unsigned>(partition.size()) - 1; }
    unsigned k() const;
};

/// Builds a spec with α selected deterministically of degree s, then
/// validates. Throws SpecInvariantViolated naming the failed constraint.
ConstructionSpec make_construction(std::shared_ptr<const Field> field, unsigned s,
                                   std::vector<unsigned> partition);

/// Same, with a caller-chosen α and no validation (lets tests build
/// deliberately broken frames).
ConstructionSpec make_construction_unchecked(std::shared_ptr<const Field> field, unsigned s,
                                             FieldElement alpha, std::vector<unsigned> partition);

void validate(const ConstructionSpec& spec);

/// A constructed linear set with exact per-point weights. Points are listed
/// in reduced-form enumeration order. spectrum[i] counts points of weight
/// i+1; basis holds the k F_q-generators of U ⊆ F_{q^h}^{l+1}.
struct LinearSetReport {
    std::uint64_t q = 0;
    unsigned k = 0;
    std::vector<unsigned> partition;
    std::vector<Point> points;
    std::vector<unsigned> weights;
    std::vector<std::uint64_t> spectrum;
    std::vector<std::vector<FieldElement>> basis;

    std::uint64_t size() const { return points.size(); }
    unsigned max_weight() const;
};

/// The k basis vectors α^m·e_i (i over parts, m < t_i) of U, in digit order.
std::vector<std::vector<FieldElement>> construction_basis(const ConstructionSpec& spec);

/// Ground-truth route: enumerate all q^k coefficient vectors, group nonzero
/// ones by normalized point, derive weights from the group sizes.
LinearSetReport build_evaluation_set(const ConstructionSpec& spec);

/// Closed-form spectrum for l = 1 (sorted t1 ≤ t2):
/// x_i = q^{k−2i+1} − q^{k−2i−1} for i < t1, plus q^{t2−t1+1} at t1 and the
/// head at t2 (merging into q+1 when t1 = t2). Throws BadShape for l ≠ 1.
std::vector<BigInt> predicted_spectrum_line(const ConstructionSpec& spec);
std::vector<BigInt> predicted_spectrum_line(const BigInt& q, unsigned t1, unsigned t2);

/// Count of weight-w points in the f_1 ≠ 0 stratum for the sorted partition.
/// Requires 1 ≤ w ≤ t_1 (OutOfRange otherwise).
BigInt predicted_stratum_count(const BigInt& q, std::span<const unsigned> sorted_partition, unsigned w);

/// Full spectrum by the stratum recursion on (t_2, …) with l−1.
std::vector<BigInt> predicted_full_spectrum(const BigInt& q, std::vector<unsigned> partition);

/// Projection frame of the construction: Π = ⟨π_1,…,π_{l+1}⟩ (projective
/// dimension k−l−2) and Ω = ⟨e_{1,t_1},…,e_{l+1,t_{l+1}}⟩ inside
/// Σ* = PG(k−1, q^h). Verifies Π ∩ Σ = ∅ (exhaustive subgeometry scan) and
/// Π ∩ Ω = ∅; throws DisjointnessFailure otherwise.
struct ProjectionFrame {
    ConstructionSpec spec;
    std::shared_ptr<Geometry> geom;
    Subspace pi;
    Subspace omega;
    std::vector<unsigned> omega_support;
};

ProjectionFrame build_projection_frame(const ConstructionSpec& spec);

/// Independent route: project every point of Σ from Π onto Ω, read the image
/// coordinates off the Ω support, derive weights from fibre sizes
/// (q^w − 1)/(q − 1).
LinearSetReport project_subgeometry(const ProjectionFrame& frame);

/// Pointwise equality including weights (orders are canonical).
bool reports_agree(const LinearSetReport& a, const LinearSetReport& b);

/// All weight distributions compatible with Σx_i = size,
/// Σx_i(q^i−1)/(q−1) = (q^k−1)/(q−1), x_i = 0 above max_weight, and the
/// disjoint-fibre rule (weights of two distinct points sum to at most k).
std::vector<std::vector<BigInt>> feasible_spectra(unsigned k, const BigInt& size, const BigInt& q,
                                                  unsigned max_weight);

/// Head of weight k−1 plus q^{k−1} points of weight one. A k = 2 subline is
/// degenerate, not a club.
bool detect_club(const LinearSetReport& report);
bool is_degenerate_subline(const LinearSetReport& report);

}  // namespace linset
