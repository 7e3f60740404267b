#include "linset/poly.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace linset {

namespace {

void strip(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().idx == 0) c.pop_back();
}

void check_tuple_shape(const PolyTuple& t) {
    if (t.entries.empty() || t.entries.size() != t.bounds.size())
        fail_config("BadTuple", "entry/bound count mismatch");
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (t.bounds[i] < 1) fail_config("BadBounds", "bounds must be >= 1");
        if (t.entries[i].c.size() > t.bounds[i])
            fail_config("BadTuple", "entry degree exceeds its bound");
    }
}

// Stack polynomials for the enumeration inner loop: no allocation, field
// arithmetic through the lookup tables.
constexpr unsigned kScratchCap = 32;

struct SPoly {
    std::array<FieldElement, kScratchCap> c;
    unsigned len = 0;  // number of coefficients, 0 = zero polynomial
};

void smod(const Field& F, SPoly& a, const SPoly& b) {
    const FieldElement lead_inv = F.inv(b.c[b.len - 1]);
    while (a.len >= b.len) {
        FieldElement f = F.mul(a.c[a.len - 1], lead_inv);
        unsigned shift = a.len - b.len;
        for (unsigned i = 0; i + 1 < b.len; ++i) a.c[shift + i] = F.sub(a.c[shift + i], F.mul(f, b.c[i]));
        --a.len;
        while (a.len && a.c[a.len - 1].idx == 0) --a.len;
    }
}

// Shared odometer state over the concatenated coefficient digits.
struct TupleDigits {
    const Field* F;
    std::vector<unsigned> bounds;
    std::vector<unsigned> offset;  // start of entry i in the digit array
    unsigned total = 0;
    std::vector<unsigned> digit;   // values in [0, q)

    TupleDigits(const Field& field, std::span<const unsigned> b) : F(&field) {
        bounds.assign(b.begin(), b.end());
        if (bounds.empty()) fail_config("BadBounds", "at least one bound required");
        for (unsigned t : bounds) {
            if (t < 1) fail_config("BadBounds", "bounds must be >= 1");
            if (t > kScratchCap) fail_config("BadBounds", "bound exceeds enumeration capacity");
            offset.push_back(total);
            total += t;
        }
        digit.assign(total, 0);
    }

    bool advance() {  // little-endian increment; false on wrap to all-zero
        const unsigned q = static_cast<unsigned>(F->q());
        for (unsigned i = 0; i < total; ++i) {
            if (++digit[i] < q) return true;
            digit[i] = 0;
        }
        return false;
    }

    SPoly entry(std::size_t i) const {
        SPoly s;
        const auto& sub = F->subfield_elements();
        unsigned len = 0;
        for (unsigned j = 0; j < bounds[i]; ++j)
            if (digit[offset[i] + j] != 0) len = j + 1;
        s.len = len;
        for (unsigned j = 0; j < len; ++j) s.c[j] = sub[digit[offset[i] + j]];
        return s;
    }

    // Reduced := first nonzero entry monic, gcd of all entries constant.
    bool reduced() const {
        std::size_t first = bounds.size();
        SPoly g;
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            SPoly s = entry(i);
            if (s.len == 0) continue;
            if (first == bounds.size()) {
                first = i;
                if (s.c[s.len - 1] != F->one()) return false;
                g = s;
            } else {
                SPoly a = g;
                while (s.len) {
                    smod(*F, a, s);
                    std::swap(a, s);
                }
                g = a;
            }
            if (g.len == 1) return true;  // gcd already constant
        }
        if (first == bounds.size()) return false;  // all zero
        return g.len == 1;
    }

    PolyTuple materialize() const {
        PolyTuple t;
        t.bounds = bounds;
        const auto& sub = F->subfield_elements();
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            Poly p;
            for (unsigned j = 0; j < bounds[i]; ++j) p.c.push_back(sub[digit[offset[i] + j]]);
            strip(p.c);
            t.entries.push_back(std::move(p));
        }
        return t;
    }
};

}  // namespace

Poly PolyRing::make(std::vector<FieldElement> coeffs) const {
    for (FieldElement c : coeffs)
        if (!F_->in_subfield(c, 1)) fail_config("CoeffNotInSubfield", "polynomial coefficient outside F_q");
    Poly p{std::move(coeffs)};
    strip(p.c);
    return p;
}

Poly PolyRing::from_indices(std::span<const std::uint32_t> idx) const {
    std::vector<FieldElement> c;
    c.reserve(idx.size());
    for (std::uint32_t i : idx) c.push_back(F_->element(i));
    return make(std::move(c));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F_->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F_->add(r.c[i], b.c[i]);
    strip(r.c);
    return r;
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, scale(b, F_->neg(F_->one()))); }

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F_->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].idx == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F_->add(r.c[i + j], F_->mul(a.c[i], b.c[j]));
    }
    return r;  // leading product of nonzero leadings is nonzero
}

Poly PolyRing::scale(const Poly& a, FieldElement c) const {
    if (c.idx == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = F_->mul(x, c);
    return r;
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) fail_config("DivisionByZero", "polynomial division by zero");
    Poly rem = a, quot;
    if (a.c.size() >= b.c.size()) quot.c.assign(a.c.size() - b.c.size() + 1, F_->zero());
    const FieldElement lead_inv = F_->inv(b.leading());
    while (!rem.is_zero() && rem.c.size() >= b.c.size()) {
        FieldElement f = F_->mul(rem.leading(), lead_inv);
        std::size_t shift = rem.c.size() - b.c.size();
        quot.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = F_->sub(rem.c[shift + i], F_->mul(f, b.c[i]));
        strip(rem.c);
    }
    strip(quot.c);
    return {quot, rem};
}

Poly PolyRing::make_monic(const Poly& a) const {
    if (a.is_zero()) fail_config("ZeroPolynomial", "cannot normalize the zero polynomial");
    return scale(a, F_->inv(a.leading()));
}

Poly PolyRing::gcd_monic(const Poly& a, const Poly& b) const {
    if (a.is_zero() && b.is_zero()) fail_config("BothZero", "gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

FieldElement PolyRing::eval(const Poly& a, FieldElement at) const {
    FieldElement acc = F_->zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = F_->add(F_->mul(acc, at), a.c[i]);
    return acc;
}

Poly tuple_gcd_monic(const PolyRing& ring, std::span<const Poly> entries) {
    Poly g;
    bool any = false;
    for (const Poly& e : entries) {
        if (e.is_zero()) continue;
        g = any ? ring.gcd_monic(g, e) : ring.make_monic(e);
        any = true;
        if (g.degree() == 0) break;
    }
    if (!any) fail_config("AllZero", "tuple has no nonzero entry");
    return g;
}

bool is_reduced(const PolyRing& ring, const PolyTuple& t) {
    check_tuple_shape(t);
    const Poly* first = nullptr;
    for (const Poly& e : t.entries)
        if (!e.is_zero()) {
            first = &e;
            break;
        }
    if (!first) return false;
    if (first->leading() != ring.field().one()) return false;
    return tuple_gcd_monic(ring, t.entries).degree() == 0;
}

PolyTuple reduce_tuple(const PolyRing& ring, const PolyTuple& t) {
    check_tuple_shape(t);
    Poly g = tuple_gcd_monic(ring, t.entries);  // AllZero on an all-zero tuple
    PolyTuple out;
    out.bounds = t.bounds;
    out.entries.reserve(t.entries.size());
    for (const Poly& e : t.entries) {
        if (e.is_zero()) {
            out.entries.push_back({});
            continue;
        }
        auto [q, r] = ring.divmod(e, g);
        if (!r.is_zero()) fail_internal("GcdDivision", "gcd does not divide a tuple entry");
        out.entries.push_back(std::move(q));
    }
    for (Poly& e : out.entries) {
        if (e.is_zero()) continue;
        FieldElement lead_inv = ring.field().inv(e.leading());
        for (Poly& f : out.entries) f = ring.scale(f, lead_inv);
        break;
    }
    return out;
}

void for_each_reduced(const PolyRing& ring, std::span<const unsigned> bounds,
                      const std::function<void(const PolyTuple&)>& visit) {
    TupleDigits od(ring.field(), bounds);
    // start at all-zero (not reduced), walk the full odometer once
    do {
        if (od.reduced()) {
            PolyTuple t = od.materialize();
            visit(t);
        }
    } while (od.advance());
}

BigInt count_reduced_by_enumeration(const PolyRing& ring, std::span<const unsigned> bounds) {
    TupleDigits od(ring.field(), bounds);
    BigInt n = 0;
    do {
        if (od.reduced()) ++n;
    } while (od.advance());
    return n;
}

BigInt count_R_stratum_by_enumeration(const PolyRing& ring, unsigned n, std::span<const unsigned> mbounds) {
    // Entry 0 is monic of degree exactly n; trailing entries have deg ≤ m_j.
    std::vector<unsigned> bounds{n + 1};
    for (unsigned m : mbounds) bounds.push_back(m + 1);
    TupleDigits od(ring.field(), bounds);
    BigInt cnt = 0;
    od.digit[n] = 1;  // leading coefficient of entry 0 pinned to 1
    // enumerate the remaining digits with an inner odometer that skips digit n
    std::vector<unsigned> free_pos;
    for (unsigned i = 0; i < od.total; ++i)
        if (i != n) free_pos.push_back(i);
    const unsigned q = static_cast<unsigned>(ring.field().q());
    bool more = true;
    while (more) {
        if (od.reduced()) ++cnt;
        more = false;
        for (unsigned pos : free_pos) {
            if (++od.digit[pos] < q) {
                more = true;
                break;
            }
            od.digit[pos] = 0;
        }
    }
    return cnt;
}

BigInt count_reduced_closed_form(std::span<const unsigned> bounds, const BigInt& q) {
    if (bounds.empty()) fail_config("BadBounds", "at least one bound required");
    std::vector<unsigned> t(bounds.begin(), bounds.end());
    for (unsigned b : t)
        if (b < 1) fail_config("BadBounds", "bounds must be >= 1");
    std::sort(t.begin(), t.end());
    const unsigned k = std::accumulate(t.begin(), t.end(), 0u);
    const unsigned l = static_cast<unsigned>(t.size()) - 1;
    BigInt total = 1;
    for (unsigned i = 1; i <= l; ++i) total += big_pow(q, k - i);
    return total;
}

BigInt count_R_stratum(unsigned n, std::span<const unsigned> mbounds, const BigInt& q) {
    std::uint64_t s = 0;
    for (unsigned m : mbounds) s += m;
    const std::uint64_t l = mbounds.size();
    if (n == 0) return big_pow(q, s + l);
    return big_pow(q, s + l + n) - big_pow(q, s + n);
}

}  // namespace linset
