#include "linset/linear_set.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace linset {

namespace {

// weight from the number of U-vectors on a point: n + 1 = q^w
unsigned weight_from_vector_count(std::uint64_t n, std::uint64_t q) {
    std::uint64_t target = n + 1, t = 1;
    unsigned w = 0;
    while (t < target) {
        t *= q;
        ++w;
    }
    if (t != target) fail_internal("NonIntegralWeight", "vector count + 1 is not a power of q");
    return w;
}

// weight from the number of subgeometry points in a fibre: n(q−1) + 1 = q^w
unsigned weight_from_fibre_size(std::uint64_t n, std::uint64_t q) {
    return weight_from_vector_count(n * (q - 1), q);
}

struct ReportAccumulator {
    std::unordered_map<Point, std::uint64_t, PointHash> counts;
};

// Lists the points of `weight_of` in reduced-form enumeration order over the
// original partition bounds; every reduced tuple must land on a known point
// and cover it exactly once.
void order_points(const ConstructionSpec& spec,
                  const std::unordered_map<Point, unsigned, PointHash>& weight_of,
                  LinearSetReport& rep, const char* mismatch_code) {
    const Field& F = *spec.field;
    PolyRing ring(F);
    Geometry geom(F, spec.l() + 1);
    std::unordered_map<Point, bool, PointHash> used;
    used.reserve(weight_of.size());
    rep.points.clear();
    rep.weights.clear();
    for_each_reduced(ring, spec.partition, [&](const PolyTuple& t) {
        std::vector<FieldElement> v(t.entries.size());
        for (std::size_t i = 0; i < t.entries.size(); ++i) v[i] = ring.eval(t.entries[i], spec.alpha);
        Point p = geom.point(std::move(v));
        auto it = weight_of.find(p);
        if (it == weight_of.end())
            fail_check(mismatch_code, "reduced tuple evaluates outside the constructed set");
        if (used[p]) fail_check(mismatch_code, "two reduced tuples evaluate to the same point");
        used[p] = true;
        rep.points.push_back(p);
        rep.weights.push_back(it->second);
    });
    if (rep.points.size() != weight_of.size())
        fail_check(mismatch_code, "constructed set has points not reached by any reduced tuple");
}

void fill_spectrum(LinearSetReport& rep) {
    rep.spectrum.assign(rep.k, 0);
    for (unsigned w : rep.weights) {
        if (w < 1 || w > rep.k) fail_internal("NonIntegralWeight", "weight out of range");
        ++rep.spectrum[w - 1];
    }
}

}  // namespace

unsigned ConstructionSpec::k() const {
    return std::accumulate(partition.begin(), partition.end(), 0u);
}

ConstructionSpec make_construction(std::shared_ptr<const Field> field, unsigned s,
                                   std::vector<unsigned> partition) {
    if (!field) fail_config("BadField", "construction needs a field");
    ConstructionSpec spec;
    spec.field = std::move(field);
    spec.s = s;
    spec.partition = std::move(partition);
    if (s < 2 || spec.field->h() % s != 0)
        fail_config("SpecInvariantViolated", "s = " + std::to_string(s) + " must satisfy s >= 2 and s | h");
    spec.alpha = spec.field->select_alpha(s);
    validate(spec);
    return spec;
}

ConstructionSpec make_construction_unchecked(std::shared_ptr<const Field> field, unsigned s,
                                             FieldElement alpha, std::vector<unsigned> partition) {
    ConstructionSpec spec;
    spec.field = std::move(field);
    spec.s = s;
    spec.alpha = alpha;
    spec.partition = std::move(partition);
    return spec;
}

void validate(const ConstructionSpec& spec) {
    if (!spec.field) fail_config("SpecInvariantViolated", "missing field");
    if (spec.partition.size() < 2)
        fail_config("SpecInvariantViolated", "partition needs at least two parts");
    for (unsigned t : spec.partition)
        if (t < 1) fail_config("SpecInvariantViolated", "every partition part must be >= 1");
    const Field& F = *spec.field;
    if (spec.s < 2 || F.h() % spec.s != 0)
        fail_config("SpecInvariantViolated", "s must satisfy s >= 2 and s | h");
    if (F.degree_over_base(spec.alpha) != spec.s)
        fail_config("SpecInvariantViolated", "alpha does not generate a degree-s extension");
    for (std::size_t i = 0; i < spec.partition.size(); ++i)
        for (std::size_t j = i + 1; j < spec.partition.size(); ++j)
            if (spec.partition[i] + spec.partition[j] > spec.s + 1)
                fail_config("SpecInvariantViolated",
                            "t_" + std::to_string(i + 1) + " + t_" + std::to_string(j + 1) + " = " +
                                std::to_string(spec.partition[i] + spec.partition[j]) + " exceeds s + 1 = " +
                                std::to_string(spec.s + 1));
}

unsigned LinearSetReport::max_weight() const {
    for (unsigned i = static_cast<unsigned>(spectrum.size()); i-- > 0;)
        if (spectrum[i] != 0) return i + 1;
    return 0;
}

std::vector<std::vector<FieldElement>> construction_basis(const ConstructionSpec& spec) {
    const Field& F = *spec.field;
    const unsigned r = spec.l() + 1;
    std::vector<std::vector<FieldElement>> basis;
    for (unsigned i = 0; i < r; ++i) {
        FieldElement apow = F.one();
        for (unsigned m = 0; m < spec.partition[i]; ++m) {
            std::vector<FieldElement> v(r, F.zero());
            v[i] = apow;
            basis.push_back(std::move(v));
            apow = F.mul(apow, spec.alpha);
        }
    }
    return basis;
}

LinearSetReport build_evaluation_set(const ConstructionSpec& spec) {
    validate(spec);
    const Field& F = *spec.field;
    const unsigned r = spec.l() + 1;
    const unsigned k = spec.k();
    const auto& sub = F.subfield_elements();
    const std::uint64_t q = F.q();
    Geometry geom(F, r);

    std::vector<std::vector<FieldElement>> basis = construction_basis(spec);

    LinearSetReport rep;
    rep.q = q;
    rep.k = k;
    rep.partition = spec.partition;
    rep.basis = basis;

    std::unordered_map<Point, std::uint64_t, PointHash> counts;
    std::vector<unsigned> digit(k, 0);
    while (true) {  // odometer over all q^k coefficient vectors, zero skipped
        unsigned i = 0;
        while (i < k && ++digit[i] == q) digit[i++] = 0;
        if (i == k) break;
        std::vector<FieldElement> v(r, F.zero());
        for (unsigned d = 0; d < k; ++d) {
            if (digit[d] == 0) continue;
            const auto& b = basis[d];
            for (unsigned c = 0; c < r; ++c)
                if (b[c].idx != 0) v[c] = F.add(v[c], F.mul(sub[digit[d]], b[c]));
        }
        ++counts[geom.point(std::move(v))];
    }

    std::unordered_map<Point, unsigned, PointHash> weight_of;
    weight_of.reserve(counts.size());
    for (const auto& [p, n] : counts) weight_of.emplace(p, weight_from_vector_count(n, q));

    order_points(spec, weight_of, rep, "EvaluationBijectionFailure");
    fill_spectrum(rep);

    if (BigInt(rep.size()) != count_reduced_closed_form(spec.partition, BigInt(q)))
        fail_internal("SizeMismatch", "evaluation set size disagrees with the closed form");
    return rep;
}

std::vector<BigInt> predicted_spectrum_line(const BigInt& q, unsigned t1, unsigned t2) {
    if (t1 > t2) std::swap(t1, t2);
    const unsigned k = t1 + t2;
    std::vector<BigInt> x(k, 0);
    for (unsigned i = 1; i + 1 <= t1; ++i) x[i - 1] = big_pow(q, k - 2 * i + 1) - big_pow(q, k - 2 * i - 1);
    x[t1 - 1] += big_pow(q, t2 - t1 + 1);
    x[t2 - 1] += 1;
    return x;
}

std::vector<BigInt> predicted_spectrum_line(const ConstructionSpec& spec) {
    if (spec.l() != 1) fail_config("BadShape", "the closed-form line spectrum needs l = 1");
    return predicted_spectrum_line(BigInt(spec.field->q()), spec.partition[0], spec.partition[1]);
}

BigInt predicted_stratum_count(const BigInt& q, std::span<const unsigned> sorted_partition, unsigned w) {
    if (sorted_partition.size() < 2) fail_config("BadShape", "stratum counts need at least two parts");
    if (!std::is_sorted(sorted_partition.begin(), sorted_partition.end()))
        fail_config("BadShape", "stratum counts expect an ascending partition");
    const unsigned t1 = sorted_partition[0];
    const unsigned l = static_cast<unsigned>(sorted_partition.size()) - 1;
    const unsigned k = std::accumulate(sorted_partition.begin(), sorted_partition.end(), 0u);
    if (w < 1 || w > t1) fail_config("OutOfRange", "stratum weight must satisfy 1 <= w <= t_1");
    auto qp = [&](int exp) {
        if (exp < 0) fail_internal("NegativeExponent", "stratum formula exponent underflow");
        return big_pow(q, static_cast<unsigned>(exp));
    };
    const int ki = static_cast<int>(k), li = static_cast<int>(l), wi = static_cast<int>(w);
    if (w == t1) return qp(ki - (static_cast<int>(t1) - 1) * li - static_cast<int>(t1));
    BigInt total = 0;
    for (int i = wi; i <= static_cast<int>(t1); ++i)
        total += qp(ki - (wi - 1) * li - i) - qp(ki - wi * li - i);
    for (int i = wi + 1; i <= static_cast<int>(t1) - 1; ++i)
        total -= qp(ki - wi * li - i) - qp(ki - (wi + 1) * li - i);
    return total;
}

std::vector<BigInt> predicted_full_spectrum(const BigInt& q, std::vector<unsigned> partition) {
    std::sort(partition.begin(), partition.end());
    const unsigned k = std::accumulate(partition.begin(), partition.end(), 0u);
    std::vector<BigInt> x(k, 0);
    std::span<const unsigned> rest(partition);
    while (rest.size() > 1) {
        for (unsigned w = 1; w <= rest[0]; ++w) x[w - 1] += predicted_stratum_count(q, rest, w);
        rest = rest.subspan(1);
    }
    x[rest[0] - 1] += 1;  // f_1 = … = f_l = 0 leaves the single point of weight t_{l+1}
    return x;
}

ProjectionFrame build_projection_frame(const ConstructionSpec& spec) {
    if (!spec.field) fail_config("SpecInvariantViolated", "missing field");
    if (spec.partition.size() < 2)
        fail_config("SpecInvariantViolated", "partition needs at least two parts");
    const Field& F = *spec.field;
    const unsigned k = spec.k();

    ProjectionFrame frame;
    frame.spec = spec;
    frame.geom = std::make_shared<Geometry>(F, k);
    Geometry& geom = *frame.geom;

    std::vector<std::vector<FieldElement>> pi_rows;
    std::vector<std::vector<FieldElement>> omega_rows;
    unsigned offset = 0;
    for (unsigned t : spec.partition) {
        for (unsigned j = 0; j + 1 < t; ++j) {  // π_i = ∅ when t = 1
            std::vector<FieldElement> row(k, F.zero());
            row[offset + j] = F.one();
            row[offset + j + 1] = F.neg(spec.alpha);
            pi_rows.push_back(std::move(row));
        }
        frame.omega_support.push_back(offset + t - 1);
        omega_rows.push_back(geom.unit_vector(offset + t - 1));
        offset += t;
    }
    frame.pi = geom.subspace(std::move(pi_rows));
    frame.omega = geom.subspace(std::move(omega_rows));
    if (frame.pi.rank() != k - spec.l() - 1)
        fail_internal("BadFrameRank", "axis rank disagrees with the construction");

    if (geom.meet(frame.pi, frame.omega).rank() != 0)
        fail_check("DisjointnessFailure", "axis meets the projection target");
    for (const Point& p : geom.subgeometry_points())
        if (geom.contains(frame.pi, p))
            fail_check("DisjointnessFailure", "axis meets the canonical subgeometry");
    return frame;
}

LinearSetReport project_subgeometry(const ProjectionFrame& frame) {
    const ConstructionSpec& spec = frame.spec;
    if (!frame.geom || frame.omega_support.size() != spec.partition.size())
        fail_config("FrameInvalid", "frame does not match its construction spec");
    const Field& F = *spec.field;
    Geometry& geom = *frame.geom;
    const unsigned r = spec.l() + 1;
    const std::uint64_t q = F.q();
    Geometry target_geom(F, r);

    std::unordered_map<Point, std::uint64_t, PointHash> fibre;
    for (const Point& p : geom.subgeometry_points()) {
        Point img = geom.project(p, frame.pi, frame.omega);
        std::vector<FieldElement> small(r);
        std::size_t support_at = 0;
        for (unsigned c = 0; c < geom.coords(); ++c) {
            if (support_at < frame.omega_support.size() && c == frame.omega_support[support_at]) {
                small[support_at] = img.v[c];
                ++support_at;
            } else if (img.v[c].idx != 0) {
                fail_check("FrameInvalid", "projection image leaves the target support");
            }
        }
        ++fibre[target_geom.point(std::move(small))];
    }

    LinearSetReport rep;
    rep.q = q;
    rep.k = spec.k();
    rep.partition = spec.partition;
    rep.basis = construction_basis(spec);

    std::unordered_map<Point, unsigned, PointHash> weight_of;
    weight_of.reserve(fibre.size());
    for (const auto& [p, n] : fibre) weight_of.emplace(p, weight_from_fibre_size(n, q));

    order_points(spec, weight_of, rep, "ProjectionMismatch");
    fill_spectrum(rep);
    return rep;
}

bool reports_agree(const LinearSetReport& a, const LinearSetReport& b) {
    return a.q == b.q && a.k == b.k && a.points == b.points && a.weights == b.weights &&
           a.spectrum == b.spectrum;
}

std::vector<std::vector<BigInt>> feasible_spectra(unsigned k, const BigInt& size, const BigInt& q,
                                                  unsigned max_weight) {
    if (k < 2) fail_config("BadShape", "spectra need rank k >= 2");
    if (max_weight > k) max_weight = k;
    // per-point vector-space weights: a weight-w point accounts for
    // (q^w − 1)/(q − 1) of the (q^k − 1)/(q − 1) projective vector classes
    std::vector<BigInt> unit(max_weight + 1);
    for (unsigned w = 1; w <= max_weight; ++w) unit[w] = (big_pow(q, w) - 1) / (q - 1);
    const BigInt vector_budget = (big_pow(q, k) - 1) / (q - 1);

    std::vector<std::vector<BigInt>> out;
    std::vector<BigInt> x(k, 0);
    std::vector<unsigned> chosen;  // weights with x > 0 so far (descending)

    auto rec = [&](auto&& self, unsigned w, BigInt points_left, BigInt vectors_left) -> void {
        if (w == 0) {
            if (points_left == 0 && vectors_left == 0) out.push_back(x);
            return;
        }
        // every remaining point contributes between 1 and unit[w] classes
        if (vectors_left < points_left || vectors_left > points_left * unit[w]) return;
        BigInt cap = points_left;
        BigInt by_vectors = vectors_left / unit[w];
        if (by_vectors < cap) cap = by_vectors;
        // two distinct points have trivially intersecting fibres, so their
        // weights sum to at most k
        if (2 * w > k && cap > 1) cap = 1;
        if (!chosen.empty() && chosen.front() + w > k && cap > 0) cap = 0;
        for (BigInt c = cap; c >= 0; --c) {
            x[w - 1] = c;
            if (c > 0) chosen.push_back(w);
            self(self, w - 1, points_left - c, vectors_left - c * unit[w]);
            if (c > 0) chosen.pop_back();
        }
        x[w - 1] = 0;
    };
    rec(rec, max_weight, size, vector_budget);
    return out;
}

bool detect_club(const LinearSetReport& report) {
    if (report.k < 3) return false;
    const BigInt head_weight_ones = big_pow(BigInt(report.q), report.k - 1);
    if (BigInt(report.spectrum[0]) != head_weight_ones) return false;
    if (report.spectrum[report.k - 2] != 1) return false;
    for (unsigned i = 1; i + 1 < report.k; ++i)
        if (i != report.k - 2 && report.spectrum[i] != 0) return false;
    return report.spectrum[report.k - 1] == 0;
}

bool is_degenerate_subline(const LinearSetReport& report) {
    return report.k == 2 && report.size() == report.q + 1;
}

}  // namespace linset
