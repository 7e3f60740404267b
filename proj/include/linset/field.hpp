#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "linset/error.hpp"

namespace linset {

/// An element of F_{p^{e·h}}, identified by the base-p packing of its
/// coefficient vector in the power basis of the defining root. Equality of
/// indices is equality of elements (the representation is canonical).
struct FieldElement {
    std::uint32_t idx = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// The tower F_p ⊆ F_q ⊆ F_{q^h} with q = p^e, realized as the single
/// extension F_p[X]/(modulus) of degree e·h. Subfields are identified by
/// Frobenius fixed-point tests; all arithmetic is exact (log/antilog tables
/// over a fixed primitive element). Immutable after construction.
class Field {
public:
    /// Deterministic modulus search: monic degree-(e·h) polynomials over F_p
    /// in lexicographic coefficient order, first irreducible wins; the seed
    /// rotates the starting point of the scan.
    static Field make(unsigned p, unsigned e, unsigned h, std::uint64_t seed = 0);

    /// Build the field on a caller-supplied modulus (e.g. loaded from JSON).
    /// The modulus must be monic irreducible of degree e·h over F_p.
    static Field with_modulus(unsigned p, unsigned e, unsigned h, const std::vector<unsigned>& modulus,
                              std::uint64_t seed = 0);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned h() const { return h_; }
    unsigned ext_degree() const { return n_; }       // e·h
    std::uint64_t q() const { return q_; }           // p^e
    std::uint64_t order() const { return order_; }   // p^{e·h}
    std::uint64_t seed() const { return seed_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement generator() const { return gen_; }
    FieldElement element(std::uint64_t idx) const;
    FieldElement from_coeffs(std::span<const unsigned> coeffs) const;
    std::vector<unsigned> coeffs(FieldElement x) const;

    bool is_zero(FieldElement x) const { return x.idx == 0; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t n) const;

    /// x ↦ x^q, the F_q-Frobenius.
    FieldElement frobenius_q(FieldElement x) const;

    /// Least d ≥ 1 with x^{q^d} = x (length of the Frobenius orbit); divides h.
    unsigned degree_over_base(FieldElement x) const;

    /// Membership in the subfield of order q^d; requires d | h.
    bool in_subfield(FieldElement x, unsigned d) const;

    /// First power of the fixed generator with Frobenius orbit of length
    /// exactly s; requires s ≥ 2 and s | h. Deterministic.
    FieldElement select_alpha(unsigned s) const;

    /// The q elements of F_q, ascending by index.
    const std::vector<FieldElement>& subfield_elements() const { return subfield_; }

    /// Coordinates of x in the F_q-basis {1, r, …, r^{h-1}} of F_{q^h}, where
    /// r is the defining root. Entries are elements of F_q.
    std::vector<FieldElement> expand_over_subfield(FieldElement x) const;

private:
    Field() = default;
    void init_tables();
    void init_subfield();
    FieldElement slow_mul(FieldElement a, FieldElement b) const;

    unsigned p_ = 0, e_ = 0, h_ = 0, n_ = 0;
    std::uint64_t q_ = 0, order_ = 0, seed_ = 0;
    std::vector<unsigned> modulus_;             // length n+1, monic
    std::vector<std::uint64_t> pw_;             // p^i, i = 0..n
    FieldElement gen_;
    std::vector<std::uint32_t> exp_;            // size 2(order-1)
    std::vector<std::uint32_t> log_;            // size order; log_[0] unused
    std::vector<FieldElement> subfield_;        // the q elements of F_q
    std::vector<FieldElement> fq_fp_basis_;     // F_p-basis of F_q, size e
    std::vector<unsigned> expand_inv_;          // n×n inverse over F_p, row-major
};

struct FieldElementHash {
    std::size_t operator()(FieldElement x) const { return std::hash<std::uint32_t>{}(x.idx); }
};

}  // namespace linset
