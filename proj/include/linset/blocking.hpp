#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linset/linear_set.hpp"
#include "linset/projective.hpp"

namespace linset {

/// Line-by-line incidence scan of a point set in PG(2, q^h). Lines are the
/// dual points; a point lies on a line when the dot form vanishes.
struct BlockingScan {
    bool blocking = false;
    std::uint64_t line_count = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // |ℓ ∩ B| → #lines
    std::optional<Point> missed_line;                  // witness when not blocking
};

struct MinimalityScan {
    bool minimal = false;
    std::vector<std::uint64_t> tangents;  // per set point, aligned with input order
};

struct RedeiLine {
    Point line;      // dual coordinates
    unsigned rank;   // log_q(m_ℓ + 1) with m_ℓ = #nonzero U-vectors on ℓ
    friend bool operator==(const RedeiLine&, const RedeiLine&) = default;
};

struct SecantScan {
    std::map<std::uint64_t, std::uint64_t> histogram;
    bool has_q_plus_one_secant = false;
};

/// Every line of the plane meets the set. Throws NotAPlane unless the points
/// have three coordinates.
BlockingScan verify_blocking(const Field& F, const std::vector<Point>& set);

/// Every point of a blocking set lies on at least one tangent line. Throws
/// NotBlocking when the set does not block.
MinimalityScan verify_minimal(const Field& F, const std::vector<Point>& set);

/// All lines whose induced linear set has rank k−1. Needs the source basis
/// (MissingSource); non-Rédei iff the result is empty.
std::vector<RedeiLine> redei_lines(const Field& F, const LinearSetReport& report);

/// Histogram of |ℓ ∩ set| over all lines, with the (q+1)-secant flag.
SecantScan secant_spectrum(const Field& F, const std::vector<Point>& set);

/// Number of set points on the line through `a` and `b`.
std::uint64_t line_intersection_count(const Field& F, const std::vector<Point>& set, const Point& a,
                                      const Point& b);

/// Full certificate for a constructed linear set in PG(2, q^h): blocking,
/// smallness (|B| < 3(q^h+1)/2, strict), minimality, Rédei lines, secants.
struct BlockingCertificate {
    std::uint64_t size = 0;
    bool blocking = false;
    bool minimal = false;
    bool small = false;
    BlockingScan scan;
    MinimalityScan minimality;
    std::vector<RedeiLine> redei;
    SecantScan secants;
};

BlockingCertificate certify_blocking(const Field& F, const LinearSetReport& report);

}  // namespace linset
