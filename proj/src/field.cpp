#include "linset/field.hpp"

#include <algorithm>
#include <numeric>

namespace linset {
namespace {

constexpr std::uint64_t kMaxOrder = 1u << 20;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p on plain unsigned vectors, used only while the
// field itself is being built (modulus search, defining arithmetic).
using FpPoly = std::vector<unsigned>;

void fp_strip(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic-ish (leading coefficient invertible); in-place remainder.
FpPoly fp_mod(FpPoly a, const FpPoly& b, unsigned p) {
    fp_strip(a);
    const std::size_t db = b.size() - 1;
    // inverse of leading coefficient of b
    unsigned lead = b.back();
    unsigned lead_inv = 1;
    for (unsigned c = 1; c < p; ++c)
        if (c * lead % p == 1) { lead_inv = c; break; }
    while (a.size() >= b.size() && !a.empty()) {
        unsigned f = static_cast<unsigned>((static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) {
            unsigned sub = static_cast<unsigned>((static_cast<std::uint64_t>(f) * b[i]) % p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        fp_strip(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, unsigned p) {
    if (a.empty() || b.empty()) return {};
    FpPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<unsigned>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return fp_mod(std::move(prod), mod, p);
}

// Irreducibility by trial division: no monic divisor of degree 1..deg/2.
bool fp_irreducible(const FpPoly& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            FpPoly div(d + 1, 0);
            std::uint64_t t = m;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            div[d] = 1;
            if (fp_mod(f, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field Field::make(unsigned p, unsigned e, unsigned h, std::uint64_t seed) {
    if (!is_prime_u64(p)) fail_config("NonPrimeP", "p = " + std::to_string(p) + " is not prime");
    if (e < 1 || h < 1) fail_config("BadExtensionDegree", "e and h must be positive");

    const unsigned n = e * h;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) {
        count *= p;
        if (count > kMaxOrder) fail_config("FieldTooLarge", "p^{e.h} exceeds the supported table size");
    }

    // Monic degree-n candidates in lexicographic coefficient order; the seed
    // rotates the start of the scan so fixtures stay reproducible.
    const std::uint64_t start = count ? seed % count : 0;
    for (std::uint64_t step = 0; step < count; ++step) {
        std::uint64_t m = (start + step) % count;
        FpPoly cand(n + 1, 0);
        for (unsigned i = 0; i < n; ++i) {
            cand[i] = static_cast<unsigned>(m % p);
            m /= p;
        }
        cand[n] = 1;
        if (fp_irreducible(cand, p)) return with_modulus(p, e, h, cand, seed);
    }
    fail_internal("NoIrreducibleFound", "modulus search exhausted without a hit");
}

Field Field::with_modulus(unsigned p, unsigned e, unsigned h, const std::vector<unsigned>& modulus,
                          std::uint64_t seed) {
    if (!is_prime_u64(p)) fail_config("NonPrimeP", "p = " + std::to_string(p) + " is not prime");
    if (e < 1 || h < 1) fail_config("BadExtensionDegree", "e and h must be positive");
    const unsigned n = e * h;
    if (modulus.size() != n + 1 || modulus[n] % p != 1)
        fail_config("BadModulus", "modulus must be monic of degree e.h");
    FpPoly mod = modulus;
    for (auto& c : mod) c %= p;
    if (!fp_irreducible(mod, p)) fail_config("BadModulus", "modulus is reducible over F_p");

    Field F;
    F.p_ = p;
    F.e_ = e;
    F.h_ = h;
    F.n_ = n;
    F.seed_ = seed;
    F.modulus_ = mod;
    F.pw_.resize(n + 1);
    F.pw_[0] = 1;
    for (unsigned i = 1; i <= n; ++i) F.pw_[i] = F.pw_[i - 1] * p;
    F.order_ = F.pw_[n];
    if (F.order_ > kMaxOrder) fail_config("FieldTooLarge", "p^{e.h} exceeds the supported table size");
    F.q_ = 1;
    for (unsigned i = 0; i < e; ++i) F.q_ *= p;
    F.init_tables();
    F.init_subfield();
    return F;
}

FieldElement Field::element(std::uint64_t idx) const {
    if (idx >= order_) fail_config("BadElementIndex", "index exceeds field order");
    return {static_cast<std::uint32_t>(idx)};
}

FieldElement Field::from_coeffs(std::span<const unsigned> coeffs) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i >= n_) {
            if (coeffs[i] % p_ != 0) fail_config("BadElementCoeffs", "coefficient vector too long");
            continue;
        }
        idx += static_cast<std::uint64_t>(coeffs[i] % p_) * pw_[i];
    }
    return {static_cast<std::uint32_t>(idx)};
}

std::vector<unsigned> Field::coeffs(FieldElement x) const {
    std::vector<unsigned> c(n_);
    std::uint64_t t = x.idx;
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = static_cast<unsigned>(t % p_);
        t /= p_;
    }
    return c;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.idx ^ b.idx};
    std::uint64_t r = 0, x = a.idx, y = b.idx;
    for (unsigned i = 0; i < n_ && (x || y); ++i) {
        r += ((x + y) % p_) * pw_[i];
        x /= p_;
        y /= p_;
    }
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::neg(FieldElement a) const {
    if (p_ == 2) return a;
    std::uint64_t r = 0, x = a.idx;
    for (unsigned i = 0; i < n_ && x; ++i) {
        unsigned d = static_cast<unsigned>(x % p_);
        r += static_cast<std::uint64_t>((p_ - d) % p_) * pw_[i];
        x /= p_;
    }
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.idx == 0 || b.idx == 0) return {0};
    return {exp_[log_[a.idx] + log_[b.idx]]};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.idx == 0) fail_config("DivisionByZero", "inverse of zero");
    const std::uint64_t m = order_ - 1;
    return {exp_[(m - log_[a.idx]) % m]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t n) const {
    if (a.idx == 0) return n == 0 ? one() : zero();
    const std::uint64_t m = order_ - 1;
    std::uint64_t l = (static_cast<std::uint64_t>(log_[a.idx]) % m) * (n % m) % m;
    return {exp_[l]};
}

FieldElement Field::frobenius_q(FieldElement x) const { return pow(x, q_); }

unsigned Field::degree_over_base(FieldElement x) const {
    unsigned d = 1;
    FieldElement y = frobenius_q(x);
    while (y != x) {
        y = frobenius_q(y);
        ++d;
    }
    if (h_ % d != 0) fail_internal("BadFrobeniusOrbit", "orbit length does not divide h");
    return d;
}

bool Field::in_subfield(FieldElement x, unsigned d) const {
    if (d < 1 || h_ % d != 0) fail_config("InvalidDegree", "d must divide h");
    std::uint64_t qd = 1;
    for (unsigned i = 0; i < d; ++i) qd *= q_;
    return pow(x, qd) == x;
}

FieldElement Field::select_alpha(unsigned s) const {
    if (s < 2 || h_ % s != 0)
        fail_config("InvalidDegree", "alpha degree s = " + std::to_string(s) + " requires s >= 2 and s | h");
    FieldElement cand = gen_;
    for (std::uint64_t j = 1; j < order_; ++j) {
        if (degree_over_base(cand) == s) return cand;
        cand = mul(cand, gen_);
    }
    fail_internal("NoAlphaFound", "no element of the requested degree");
}

FieldElement Field::slow_mul(FieldElement a, FieldElement b) const {
    FpPoly pa = coeffs(a), pb = coeffs(b);
    fp_strip(pa);
    fp_strip(pb);
    FpPoly r = fp_mulmod(pa, pb, modulus_, p_);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i) idx += static_cast<std::uint64_t>(r[i]) * pw_[i];
    return {static_cast<std::uint32_t>(idx)};
}

void Field::init_tables() {
    const std::uint64_t m = order_ - 1;
    // Smallest-index primitive element.
    auto order_ok = [&](FieldElement g) {
        for (std::uint64_t r : prime_factors(m)) {
            FieldElement y = one();
            std::uint64_t n = m / r;
            FieldElement base = g;
            while (n) {
                if (n & 1) y = slow_mul(y, base);
                base = slow_mul(base, base);
                n >>= 1;
            }
            if (y == one()) return false;
        }
        return true;
    };
    gen_ = one();
    if (m > 1) {
        bool found = false;
        for (std::uint64_t i = 2; i < order_; ++i) {
            if (order_ok({static_cast<std::uint32_t>(i)})) {
                gen_ = {static_cast<std::uint32_t>(i)};
                found = true;
                break;
            }
        }
        if (!found) fail_internal("NoGenerator", "primitive element search failed");
    }
    exp_.assign(2 * m, 1);
    log_.assign(order_, 0);
    FieldElement cur = one();
    for (std::uint64_t i = 0; i < m; ++i) {
        exp_[i] = cur.idx;
        exp_[i + m] = cur.idx;
        log_[cur.idx] = static_cast<std::uint32_t>(i);
        cur = slow_mul(cur, gen_);
    }
    if (cur != one()) fail_internal("BadGeneratorOrder", "generator order mismatch");
}

void Field::init_subfield() {
    subfield_.clear();
    for (std::uint64_t i = 0; i < order_; ++i) {
        FieldElement x{static_cast<std::uint32_t>(i)};
        if (pow(x, q_) == x) subfield_.push_back(x);
    }
    if (subfield_.size() != q_) fail_internal("BadSubfield", "Frobenius fixed set has wrong size");

    // Greedy F_p-basis of F_q from the subfield list (row reduction mod p).
    fq_fp_basis_.clear();
    std::vector<std::vector<unsigned>> rows;  // reduced rows
    for (FieldElement x : subfield_) {
        if (x.idx == 0) continue;
        std::vector<unsigned> v = coeffs(x);
        for (const auto& r : rows) {
            // eliminate at the pivot of r
            std::size_t piv = 0;
            while (piv < r.size() && r[piv] == 0) ++piv;
            if (piv < v.size() && v[piv] != 0) {
                unsigned f = v[piv];  // r has pivot 1 after scaling below
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] = (v[i] + p_ * p_ - f * r[i] % p_) % p_;
            }
        }
        bool zero = std::all_of(v.begin(), v.end(), [](unsigned c) { return c == 0; });
        if (!zero) {
            std::size_t piv = 0;
            while (v[piv] == 0) ++piv;
            unsigned inv = 1;
            for (unsigned c = 1; c < p_; ++c)
                if (c * v[piv] % p_ == 1) { inv = c; break; }
            for (auto& c : v) c = static_cast<unsigned>(static_cast<std::uint64_t>(c) * inv % p_);
            rows.push_back(v);
            fq_fp_basis_.push_back(x);
            if (fq_fp_basis_.size() == e_) break;
        }
    }
    if (fq_fp_basis_.size() != e_) fail_internal("BadSubfieldBasis", "could not extract an F_p-basis of F_q");

    // Invert the F_p-linear map (c_{j,m}) -> sum c_{j,m} s_m r^j, columns
    // indexed by t = j*e + m. Gives expand_over_subfield in O(n^2).
    std::vector<std::vector<unsigned>> mat(n_, std::vector<unsigned>(2 * n_, 0));
    FieldElement rootpow = one();
    const FieldElement root = n_ > 1 ? element(p_) : one();
    for (unsigned j = 0; j < h_; ++j) {
        for (unsigned m = 0; m < e_; ++m) {
            FieldElement col = mul(rootpow, fq_fp_basis_[m]);
            std::vector<unsigned> cc = coeffs(col);
            for (unsigned row = 0; row < n_; ++row) mat[row][j * e_ + m] = cc[row];
        }
        rootpow = mul(rootpow, root);
    }
    for (unsigned i = 0; i < n_; ++i) mat[i][n_ + i] = 1;
    // Gauss-Jordan mod p
    unsigned row = 0;
    for (unsigned col = 0; col < n_ && row < n_; ++col) {
        unsigned sel = row;
        while (sel < n_ && mat[sel][col] == 0) ++sel;
        if (sel == n_) continue;
        std::swap(mat[sel], mat[row]);
        unsigned inv = 1;
        for (unsigned c = 1; c < p_; ++c)
            if (c * mat[row][col] % p_ == 1) { inv = c; break; }
        for (auto& c : mat[row]) c = static_cast<unsigned>(static_cast<std::uint64_t>(c) * inv % p_);
        for (unsigned r = 0; r < n_; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            unsigned f = mat[r][col];
            for (unsigned c = 0; c < 2 * n_; ++c)
                mat[r][c] = (mat[r][c] + p_ * p_ - f * mat[row][c] % p_) % p_;
        }
        ++row;
    }
    if (row != n_) fail_internal("BadExpandMatrix", "power basis over F_q is not a basis");
    expand_inv_.assign(n_ * n_, 0);
    for (unsigned r = 0; r < n_; ++r)
        for (unsigned c = 0; c < n_; ++c) expand_inv_[r * n_ + c] = mat[r][n_ + c];
}

std::vector<FieldElement> Field::expand_over_subfield(FieldElement x) const {
    std::vector<unsigned> cx = coeffs(x);
    std::vector<FieldElement> out(h_, zero());
    for (unsigned t = 0; t < n_; ++t) {
        std::uint64_t acc = 0;
        for (unsigned c = 0; c < n_; ++c) acc += static_cast<std::uint64_t>(expand_inv_[t * n_ + c]) * cx[c];
        unsigned v = static_cast<unsigned>(acc % p_);
        if (v == 0) continue;
        unsigned j = t / e_, m = t % e_;
        out[j] = add(out[j], mul(element(v), fq_fp_basis_[m]));
    }
    return out;
}

}  // namespace linset
