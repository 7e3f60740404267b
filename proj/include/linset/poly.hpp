#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linset/bigint.hpp"
#include "linset/field.hpp"

namespace linset {

/// Dense univariate polynomial over F_q, lowest degree first, no trailing
/// zeros. The zero polynomial is the empty sequence; its degree is the
/// distinguished "none" (never an integer sentinel).
struct Poly {
    std::vector<FieldElement> c;

    bool is_zero() const { return c.empty(); }
    std::optional<int> degree() const {
        if (c.empty()) return std::nullopt;
        return static_cast<int>(c.size()) - 1;
    }
    FieldElement leading() const { return c.back(); }
    friend bool operator==(const Poly&, const Poly&) = default;
};

/// Arithmetic in F_q[X], where F_q is the Frobenius-fixed subfield of the
/// ambient field. Coefficients are ambient elements constrained to F_q; all
/// operations stay inside the subfield by closure.
class PolyRing {
public:
    explicit PolyRing(const Field& F) : F_(&F) {}

    const Field& field() const { return *F_; }

    Poly zero() const { return {}; }
    Poly one() const { return {{F_->one()}}; }
    Poly x() const { return {{F_->zero(), F_->one()}}; }

    /// Normalizes (strips trailing zeros). Coefficients must lie in F_q.
    Poly make(std::vector<FieldElement> coeffs) const;
    Poly from_indices(std::span<const std::uint32_t> idx) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly scale(const Poly& a, FieldElement c) const;
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    Poly make_monic(const Poly& a) const;

    /// Monic greatest common divisor; gcd(f, 0) is the monic multiple of f.
    /// Throws BothZero when both inputs vanish.
    Poly gcd_monic(const Poly& a, const Poly& b) const;

    FieldElement eval(const Poly& a, FieldElement at) const;

private:
    const Field* F_;
};

/// Tuple (f_1, …, f_{l+1}) with degree bounds deg f_i ≤ t_i − 1.
struct PolyTuple {
    std::vector<Poly> entries;
    std::vector<unsigned> bounds;
    friend bool operator==(const PolyTuple&, const PolyTuple&) = default;
};

/// Monic gcd of all entries (BothZero if every entry vanishes).
Poly tuple_gcd_monic(const PolyRing& ring, std::span<const Poly> entries);

/// First nonzero entry monic and gcd of all entries equal to one.
bool is_reduced(const PolyRing& ring, const PolyTuple& t);

/// Unique reduced form: divide by the common monic gcd, then scale the first
/// nonzero entry monic. Throws AllZero.
PolyTuple reduce_tuple(const PolyRing& ring, const PolyTuple& t);

/// Visits every reduced tuple with deg f_i ≤ bounds[i]−1 exactly once, in
/// lexicographic order over the concatenated coefficient vectors (first
/// coefficient varies fastest, most significant digit last).
void for_each_reduced(const PolyRing& ring, std::span<const unsigned> bounds,
                      const std::function<void(const PolyTuple&)>& visit);

/// Cardinality of the reduced-tuple set by direct enumeration (oracle route;
/// no tuple materialization).
BigInt count_reduced_by_enumeration(const PolyRing& ring, std::span<const unsigned> bounds);

/// |R_{n,≤m̄}| by enumeration: first entry monic of degree exactly n, trailing
/// degrees ≤ m̄, gcd one.
BigInt count_R_stratum_by_enumeration(const PolyRing& ring, unsigned n, std::span<const unsigned> mbounds);

/// Closed form q^{k−1}+q^{k−2}+⋯+q^{k−l}+1 with k = Σt_i, l = #bounds−1.
/// Bounds are sorted ascending internally; the count is permutation-invariant.
BigInt count_reduced_closed_form(std::span<const unsigned> bounds, const BigInt& q);

/// Closed form for |R_{n,≤m̄}|: q^{Σm̄+l} when n = 0, else q^{Σm̄+l+n} − q^{Σm̄+n}.
BigInt count_R_stratum(unsigned n, std::span<const unsigned> mbounds, const BigInt& q);

}  // namespace linset
