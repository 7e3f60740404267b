#include "linset/blocking.hpp"

#include <algorithm>
#include <array>

namespace linset {

namespace {

void check_plane(const std::vector<Point>& set) {
    if (set.empty()) fail_config("NotAPlane", "empty point set");
    for (const Point& p : set)
        if (p.v.size() != 3) fail_config("NotAPlane", "blocking analysis needs points of PG(2,.)");
}

FieldElement dot3(const Field& F, const Point& a, const Point& b) {
    FieldElement s = F.mul(a.v[0], b.v[0]);
    s = F.add(s, F.mul(a.v[1], b.v[1]));
    return F.add(s, F.mul(a.v[2], b.v[2]));
}

std::uint64_t hits_on_line(const Field& F, const std::vector<Point>& set, const Point& line) {
    std::uint64_t n = 0;
    for (const Point& p : set)
        if (dot3(F, p, line).idx == 0) ++n;
    return n;
}

}  // namespace

BlockingScan verify_blocking(const Field& F, const std::vector<Point>& set) {
    check_plane(set);
    Geometry plane(F, 3);
    BlockingScan scan;
    scan.blocking = true;
    for (const Point& line : plane.all_points()) {
        std::uint64_t n = hits_on_line(F, set, line);
        ++scan.histogram[n];
        ++scan.line_count;
        if (n == 0 && scan.blocking) {
            scan.blocking = false;
            scan.missed_line = line;
        }
    }
    return scan;
}

MinimalityScan verify_minimal(const Field& F, const std::vector<Point>& set) {
    check_plane(set);
    Geometry plane(F, 3);
    MinimalityScan scan;
    scan.tangents.assign(set.size(), 0);
    for (const Point& line : plane.all_points()) {
        std::uint64_t n = 0;
        std::size_t last = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (dot3(F, set[i], line).idx == 0) {
                ++n;
                last = i;
                if (n > 1) break;
            }
        }
        if (n == 0) fail_check("NotBlocking", "minimality is only defined for blocking sets");
        if (n == 1) ++scan.tangents[last];
    }
    scan.minimal = std::all_of(scan.tangents.begin(), scan.tangents.end(),
                               [](std::uint64_t t) { return t > 0; });
    return scan;
}

std::vector<RedeiLine> redei_lines(const Field& F, const LinearSetReport& report) {
    if (report.basis.empty()) fail_config("MissingSource", "Redei analysis needs the source basis of U");
    for (const auto& v : report.basis)
        if (v.size() != 3) fail_config("NotAPlane", "Redei analysis needs a set in PG(2,.)");

    // all nonzero vectors of U, from F_q-combinations of the basis
    const auto& sub = F.subfield_elements();
    const std::uint64_t q = F.q();
    const std::size_t k = report.basis.size();
    std::vector<std::array<FieldElement, 3>> vectors;
    std::vector<unsigned> digit(k, 0);
    while (true) {
        unsigned i = 0;
        while (i < k && ++digit[i] == q) digit[i++] = 0;
        if (i == k) break;
        std::array<FieldElement, 3> v{F.zero(), F.zero(), F.zero()};
        for (std::size_t d = 0; d < k; ++d) {
            if (digit[d] == 0) continue;
            for (int c = 0; c < 3; ++c)
                if (report.basis[d][c].idx != 0) v[c] = F.add(v[c], F.mul(sub[digit[d]], report.basis[d][c]));
        }
        vectors.push_back(v);
    }

    Geometry plane(F, 3);
    std::vector<RedeiLine> out;
    for (const Point& line : plane.all_points()) {
        std::uint64_t m = 0;
        for (const auto& v : vectors) {
            FieldElement s = F.mul(v[0], line.v[0]);
            s = F.add(s, F.mul(v[1], line.v[1]));
            s = F.add(s, F.mul(v[2], line.v[2]));
            if (s.idx == 0) ++m;
        }
        // m + 1 must be a power of q for a linear set with source U
        std::uint64_t t = 1;
        unsigned rank = 0;
        while (t < m + 1) {
            t *= q;
            ++rank;
        }
        if (t != m + 1) fail_internal("NonIntegralLineRank", "line vector count + 1 is not a power of q");
        if (rank == report.k - 1) out.push_back(RedeiLine{line, rank});
    }
    return out;
}

SecantScan secant_spectrum(const Field& F, const std::vector<Point>& set) {
    check_plane(set);
    Geometry plane(F, 3);
    SecantScan scan;
    for (const Point& line : plane.all_points()) ++scan.histogram[hits_on_line(F, set, line)];
    scan.has_q_plus_one_secant = scan.histogram.count(F.q() + 1) > 0;
    return scan;
}

std::uint64_t line_intersection_count(const Field& F, const std::vector<Point>& set, const Point& a,
                                      const Point& b) {
    Geometry plane(F, 3);
    Subspace line = plane.subspace({a.v, b.v});
    if (line.rank() != 2) fail_config("NotDistinct", "two distinct points are needed to span a line");
    Subspace dual = plane.dual(line);
    if (dual.rank() != 1) fail_internal("BadDual", "line dual is not a point");
    Point line_dual = plane.point(dual.rows[0]);
    return hits_on_line(F, set, line_dual);
}

BlockingCertificate certify_blocking(const Field& F, const LinearSetReport& report) {
    BlockingCertificate cert;
    cert.size = report.size();
    cert.scan = verify_blocking(F, report.points);
    cert.blocking = cert.scan.blocking;
    // small: |B| < 3(q^h + 1)/2, strict, compared without division
    cert.small = 2 * cert.size < 3 * (F.order() + 1);
    if (cert.blocking) {
        cert.minimality = verify_minimal(F, report.points);
        cert.minimal = cert.minimality.minimal;
    }
    cert.redei = redei_lines(F, report);
    cert.secants = secant_spectrum(F, report.points);
    return cert;
}

}  // namespace linset
