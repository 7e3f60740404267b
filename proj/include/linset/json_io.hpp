#pragma once

#include <nlohmann/json.hpp>

#include <memory>
#include <string>

#include "linset/blocking.hpp"
#include "linset/field.hpp"
#include "linset/linear_set.hpp"
#include "linset/poly.hpp"
#include "linset/projective.hpp"

namespace linset {

// Deterministic key order keeps identical configs byte-identical on disk.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {p, e, h, modulus: [c_0..c_{eh}], seed} — coefficients mod p, lowest first.
Json field_to_json(const Field& F);
std::shared_ptr<const Field> field_from_json(const Json& j);

/// Field elements serialize as coefficient vectors (mod p, lowest first).
Json element_to_json(const Field& F, FieldElement x);
FieldElement element_from_json(const Field& F, const Json& j);

Json point_to_json(const Field& F, const Point& p);
Point point_from_json(const Field& F, const Json& j);

/// Subspaces serialize as matrices of coefficient vectors; loading
/// re-canonicalizes (RREF) whatever row basis comes in.
Json subspace_to_json(const Field& F, const Subspace& s);
Subspace subspace_from_json(const Field& F, const Json& j);

Json poly_to_json(const Field& F, const Poly& p);
Json tuple_to_json(const Field& F, const PolyTuple& t);

Json spec_to_json(const ConstructionSpec& spec);

Json report_to_json(const ConstructionSpec& spec, const LinearSetReport& rep, bool include_points);
std::string report_to_csv(const Field& F, const LinearSetReport& rep);

Json certificate_to_json(const Field& F, const BlockingCertificate& cert);

}  // namespace linset
