#include "linset/json_io.hpp"

#include <sstream>

namespace linset {

Json field_to_json(const Field& F) {
    Json j;
    j["p"] = F.p();
    j["e"] = F.e();
    j["h"] = F.h();
    j["modulus"] = F.modulus();
    j["seed"] = F.seed();
    return j;
}

std::shared_ptr<const Field> field_from_json(const Json& j) {
    unsigned p = j.at("p").get<unsigned>();
    unsigned e = j.at("e").get<unsigned>();
    unsigned h = j.at("h").get<unsigned>();
    std::uint64_t seed = j.value("seed", std::uint64_t{0});
    if (j.contains("modulus")) {
        auto modulus = j.at("modulus").get<std::vector<unsigned>>();
        return std::make_shared<const Field>(Field::with_modulus(p, e, h, modulus, seed));
    }
    return std::make_shared<const Field>(Field::make(p, e, h, seed));
}

Json element_to_json(const Field& F, FieldElement x) { return Json(F.coeffs(x)); }

FieldElement element_from_json(const Field& F, const Json& j) {
    auto c = j.get<std::vector<unsigned>>();
    return F.from_coeffs(c);
}

Json point_to_json(const Field& F, const Point& p) {
    Json j = Json::array();
    for (FieldElement x : p.v) j.push_back(element_to_json(F, x));
    return j;
}

Point point_from_json(const Field& F, const Json& j) {
    std::vector<FieldElement> v;
    for (const Json& c : j) v.push_back(element_from_json(F, c));
    Geometry g(F, static_cast<unsigned>(v.size()));
    return g.point(std::move(v));
}

Json subspace_to_json(const Field& F, const Subspace& s) {
    Json j;
    j["coords"] = s.coords;
    Json rows = Json::array();
    for (const auto& row : s.rows) {
        Json r = Json::array();
        for (FieldElement x : row) r.push_back(element_to_json(F, x));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Subspace subspace_from_json(const Field& F, const Json& j) {
    const unsigned coords = j.at("coords").get<unsigned>();
    Geometry g(F, coords);
    std::vector<std::vector<FieldElement>> rows;
    for (const Json& row : j.at("rows")) {
        std::vector<FieldElement> v;
        for (const Json& c : row) v.push_back(element_from_json(F, c));
        rows.push_back(std::move(v));
    }
    return g.subspace(std::move(rows));
}

Json poly_to_json(const Field& F, const Poly& p) {
    Json j = Json::array();
    for (FieldElement c : p.c) j.push_back(c.idx);
    (void)F;
    return j;
}

Json tuple_to_json(const Field& F, const PolyTuple& t) {
    Json j;
    j["bounds"] = t.bounds;
    Json entries = Json::array();
    for (const Poly& p : t.entries) entries.push_back(poly_to_json(F, p));
    j["entries"] = std::move(entries);
    return j;
}

Json spec_to_json(const ConstructionSpec& spec) {
    Json j;
    j["field"] = field_to_json(*spec.field);
    j["s"] = spec.s;
    j["alpha"] = element_to_json(*spec.field, spec.alpha);
    j["partition"] = spec.partition;
    return j;
}

Json report_to_json(const ConstructionSpec& spec, const LinearSetReport& rep, bool include_points) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["spec"] = spec_to_json(spec);
    j["size"] = rep.size();
    j["spectrum"] = rep.spectrum;  // index i holds the number of weight-(i+1) points
    j["max_weight"] = rep.max_weight();
    if (include_points) {
        Json pts = Json::array();
        for (std::size_t i = 0; i < rep.points.size(); ++i) {
            Json entry;
            entry["point"] = point_to_json(*spec.field, rep.points[i]);
            entry["weight"] = rep.weights[i];
            pts.push_back(std::move(entry));
        }
        j["points"] = std::move(pts);
    }
    return j;
}

std::string report_to_csv(const Field& F, const LinearSetReport& rep) {
    // one row per point: coordinates as element indices, then the weight
    std::ostringstream out;
    out << "point,weight\n";
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
        for (std::size_t c = 0; c < rep.points[i].v.size(); ++c) {
            if (c) out << ' ';
            out << rep.points[i].v[c].idx;
        }
        out << ',' << rep.weights[i] << '\n';
    }
    (void)F;
    return out.str();
}

Json certificate_to_json(const Field& F, const BlockingCertificate& cert) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["size"] = cert.size;
    j["blocking"] = cert.blocking;
    j["minimal"] = cert.minimal;
    j["small"] = cert.small;
    Json redei = Json::array();
    for (const RedeiLine& r : cert.redei) {
        Json line;
        line["line"] = point_to_json(F, r.line);
        line["rank"] = r.rank;
        redei.push_back(std::move(line));
    }
    j["redei_lines"] = std::move(redei);
    Json hist;
    for (const auto& [hits, lines] : cert.secants.histogram) hist[std::to_string(hits)] = lines;
    j["secant_histogram"] = std::move(hist);
    j["has_q_plus_one_secant"] = cert.secants.has_q_plus_one_secant;
    if (!cert.blocking && cert.scan.missed_line)
        j["missed_line"] = point_to_json(F, *cert.scan.missed_line);
    return j;
}

}  // namespace linset
