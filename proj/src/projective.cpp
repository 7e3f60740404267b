#include "linset/projective.hpp"

#include <algorithm>

namespace linset {

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<unsigned> rref(const Field& F, std::vector<std::vector<FieldElement>>& rows, unsigned coords) {
    std::vector<unsigned> pivots;
    std::size_t r = 0;
    for (unsigned col = 0; col < coords && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col].idx == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        FieldElement inv = F.inv(rows[r][col]);
        for (auto& x : rows[r]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].idx == 0) continue;
            FieldElement f = rows[i][col];
            for (unsigned c = 0; c < coords; ++c) rows[i][c] = F.sub(rows[i][c], F.mul(f, rows[r][c]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

Geometry::Geometry(const Field& F, unsigned coords) : F_(&F), coords_(coords) {
    if (coords < 1) fail_config("BadAmbient", "ambient needs at least one coordinate");
}

void Geometry::check_ambient(unsigned c) const {
    if (c != coords_) fail_config("AmbientMismatch", "operands live in different ambient spaces");
}

Point Geometry::point(std::vector<FieldElement> v) const {
    check_ambient(static_cast<unsigned>(v.size()));
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].idx == 0) ++lead;
    if (lead == v.size()) fail_config("ZeroVector", "a projective point needs a nonzero vector");
    FieldElement inv = F_->inv(v[lead]);
    for (auto& x : v) x = F_->mul(x, inv);
    return Point{std::move(v)};
}

std::vector<FieldElement> Geometry::unit_vector(unsigned j) const {
    std::vector<FieldElement> v(coords_, F_->zero());
    v.at(j) = F_->one();
    return v;
}

Subspace Geometry::full_space() const {
    std::vector<std::vector<FieldElement>> rows;
    for (unsigned j = 0; j < coords_; ++j) rows.push_back(unit_vector(j));
    return Subspace{std::move(rows), coords_};
}

Subspace Geometry::subspace(std::vector<std::vector<FieldElement>> rows) const {
    for (const auto& r : rows) check_ambient(static_cast<unsigned>(r.size()));
    rref(*F_, rows, coords_);
    return Subspace{std::move(rows), coords_};
}

Subspace Geometry::span(const Subspace& a, const Subspace& b) const {
    check_ambient(a.coords);
    check_ambient(b.coords);
    std::vector<std::vector<FieldElement>> rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return subspace(std::move(rows));
}

Subspace Geometry::span_point(const Subspace& a, const Point& p) const {
    check_ambient(a.coords);
    check_ambient(static_cast<unsigned>(p.v.size()));
    std::vector<std::vector<FieldElement>> rows = a.rows;
    rows.push_back(p.v);
    return subspace(std::move(rows));
}

Subspace Geometry::dual(const Subspace& a) const {
    check_ambient(a.coords);
    std::vector<std::vector<FieldElement>> rows = a.rows;
    std::vector<unsigned> pivots = rref(*F_, rows, coords_);
    std::vector<bool> is_pivot(coords_, false);
    for (unsigned c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> kernel;
    for (unsigned f = 0; f < coords_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElement> v(coords_, F_->zero());
        v[f] = F_->one();
        for (std::size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = F_->neg(rows[i][f]);
        kernel.push_back(std::move(v));
    }
    return subspace(std::move(kernel));
}

Subspace Geometry::meet(const Subspace& a, const Subspace& b) const {
    check_ambient(a.coords);
    check_ambient(b.coords);
    return dual(span(dual(a), dual(b)));
}

bool Geometry::contains(const Subspace& a, const Point& p) const {
    check_ambient(a.coords);
    check_ambient(static_cast<unsigned>(p.v.size()));
    // reduce p against the echelon rows; contained iff the residue vanishes
    std::vector<FieldElement> v = p.v;
    for (const auto& row : a.rows) {
        unsigned piv = 0;
        while (piv < coords_ && row[piv].idx == 0) ++piv;
        if (piv == coords_ || v[piv].idx == 0) continue;
        FieldElement f = v[piv];
        for (unsigned c = 0; c < coords_; ++c) v[c] = F_->sub(v[c], F_->mul(f, row[c]));
    }
    return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x.idx == 0; });
}

Point Geometry::project(const Point& p, const Subspace& axis, const Subspace& target) const {
    check_ambient(axis.coords);
    check_ambient(target.coords);
    if (contains(axis, p)) fail_config("PointOnAxis", "projection undefined on the axis");
    if (axis.rank() + target.rank() != coords_ || meet(axis, target).rank() != 0)
        fail_config("BadFrame", "axis and target must be disjoint and complementary");
    Subspace m = meet(span_point(axis, p), target);
    if (m.rank() != 1) fail_internal("ProjectionRank", "projection image is not a single point");
    return point(m.rows[0]);
}

bool Geometry::in_canonical_subgeometry(const Point& p) const {
    for (FieldElement x : p.v)
        if (!F_->in_subfield(x, 1)) return false;
    return true;
}

std::vector<Point> Geometry::all_points() const {
    std::vector<Point> out;
    const std::uint64_t Q = F_->order();
    for (unsigned lead = 0; lead < coords_; ++lead) {
        const unsigned tail = coords_ - lead - 1;
        std::vector<std::uint64_t> digit(tail, 0);
        while (true) {
            std::vector<FieldElement> v(coords_, F_->zero());
            v[lead] = F_->one();
            for (unsigned i = 0; i < tail; ++i) v[lead + 1 + i] = F_->element(digit[i]);
            out.push_back(Point{std::move(v)});
            unsigned i = 0;
            while (i < tail && ++digit[i] == Q) digit[i++] = 0;
            if (i == tail) break;
        }
    }
    return out;
}

std::vector<Point> Geometry::subgeometry_points() const {
    std::vector<Point> out;
    const auto& sub = F_->subfield_elements();
    const std::size_t q = sub.size();
    for (unsigned lead = 0; lead < coords_; ++lead) {
        const unsigned tail = coords_ - lead - 1;
        std::vector<std::size_t> digit(tail, 0);
        while (true) {
            std::vector<FieldElement> v(coords_, F_->zero());
            v[lead] = F_->one();
            for (unsigned i = 0; i < tail; ++i) v[lead + 1 + i] = sub[digit[i]];
            out.push_back(Point{std::move(v)});
            unsigned i = 0;
            while (i < tail && ++digit[i] == q) digit[i++] = 0;
            if (i == tail) break;
        }
    }
    return out;
}

Subspace field_reduce(const Field& F, const Point& p) {
    std::vector<std::vector<FieldElement>> vectors;
    FieldElement basis = F.one();
    const FieldElement root = F.ext_degree() > 1 ? F.element(F.p()) : F.one();
    for (unsigned j = 0; j < F.h(); ++j) {
        std::vector<FieldElement> scaled(p.v.size());
        for (std::size_t i = 0; i < p.v.size(); ++i) scaled[i] = F.mul(p.v[i], basis);
        vectors.push_back(std::move(scaled));
        basis = F.mul(basis, root);
    }
    return field_reduce_span(F, vectors);
}

Subspace field_reduce_span(const Field& F, std::span<const std::vector<FieldElement>> vectors) {
    if (vectors.empty()) fail_config("BadBounds", "field reduction of an empty span");
    const unsigned r = static_cast<unsigned>(vectors.front().size());
    Geometry sub_geom(F, r * F.h());
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& vec : vectors) {
        if (vec.size() != r) fail_config("AmbientMismatch", "inconsistent vector lengths");
        std::vector<FieldElement> row;
        row.reserve(r * F.h());
        for (FieldElement x : vec) {
            std::vector<FieldElement> exp = F.expand_over_subfield(x);
            row.insert(row.end(), exp.begin(), exp.end());
        }
        rows.push_back(std::move(row));
    }
    return sub_geom.subspace(std::move(rows));
}

CrossRatio cross_ratio(const Field& F, const Point& p1, const Point& p2, const Point& p3,
                       const Point& p4) {
    const Point* ps[4] = {&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i) {
        if (ps[i]->v.size() != 2) fail_config("AmbientMismatch", "cross-ratio needs points of PG(1,.)");
        for (int j = i + 1; j < 4; ++j)
            if (*ps[i] == *ps[j]) fail_config("NotDistinct", "cross-ratio needs four distinct points");
    }
    auto det = [&](const Point& a, const Point& b) {
        return F.sub(F.mul(a.v[0], b.v[1]), F.mul(b.v[0], a.v[1]));
    };
    // Convention fixed so that (⟨(1,0)⟩,⟨(0,1)⟩,⟨(1,1)⟩,⟨(1,λ)⟩) ↦ λ.
    FieldElement num = F.mul(det(p1, p4), det(p2, p3));
    FieldElement den = F.mul(det(p1, p3), det(p2, p4));
    if (den.idx == 0) return CrossRatio{true, F.zero()};
    return CrossRatio{false, F.div(num, den)};
}

std::vector<CrossRatio> cross_ratio_orbit(const Field& F, CrossRatio r) {
    std::vector<CrossRatio> out;
    auto push = [&](CrossRatio c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    auto invert = [&](CrossRatio c) -> CrossRatio {
        if (c.infinite) return {false, F.zero()};
        if (c.value.idx == 0) return {true, F.zero()};
        return {false, F.inv(c.value)};
    };
    auto one_minus = [&](CrossRatio c) -> CrossRatio {
        if (c.infinite) return c;
        return {false, F.sub(F.one(), c.value)};
    };
    push(r);
    push(invert(r));
    push(one_minus(r));
    push(invert(one_minus(r)));
    push(one_minus(invert(r)));
    push(invert(one_minus(invert(r))));
    return out;
}

}  // namespace linset
