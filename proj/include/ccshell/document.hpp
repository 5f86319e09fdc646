#pragma once

#include "ccshell/classification.hpp"
#include "ccshell/cone.hpp"
#include "ccshell/regularity.hpp"
#include "ccshell/shelling.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccs {

using Json = nlohmann::ordered_json;

/// In-memory form of a .ccx file.
struct ComplexDocument {
    struct Column {
        unsigned degree = 0;
        std::string from;
        std::vector<std::pair<std::string, Scalar>> entries;
    };

    std::string format_version = "1.0";
    std::string ring = "Z";
    std::vector<std::vector<std::string>> bases;  // index = degree
    std::vector<Column> boundary;
    Json metadata = Json::object();
};

/// Throws ParseError with line and column on malformed text or schema
/// problems (unknown labels, bad coefficients).
ComplexDocument parse_document(const std::string& text);

/// Canonical text: one basis or boundary column per line, columns in basis
/// order, entries in row order, zero columns omitted.
std::string serialize_document(const ComplexDocument& doc);

/// Builds the complex. `ring` overrides the document ring when given.
/// Throws ValidationError when the boundary maps do not compose to zero.
ChainComplex to_complex(const ComplexDocument& doc, const std::optional<std::string>& ring = std::nullopt);

ComplexDocument to_document(const ChainComplex& c, const Json& metadata = Json::object());

// Certificate encodings. Cells are written as [degree, "label"].
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json cell_to_json(const ChainComplex& c, Cell e);
Cell cell_from_json(const ChainComplex& c, const Json& j);
Json cells_to_json(const ChainComplex& c, const std::vector<Cell>& cells);
std::vector<Cell> cells_from_json(const ChainComplex& c, const Json& j);
Json chain_to_json(const ChainComplex& c, const Chain& x);
Chain chain_from_json(const ChainComplex& c, const Json& j);
Json relation_to_json(const ChainComplex& c, const Relation& r);
Relation relation_from_json(const ChainComplex& c, const Json& j);

Json shelling_to_json(const ChainComplex& c, const ShellingCertificate& cert);
ShellingCertificate shelling_from_json(const ChainComplex& c, const Json& j);
Json regular_to_json(const ChainComplex& c, const RegularCertificate& cert);
RegularCertificate regular_from_json(const ChainComplex& c, const Json& j);
Json cone_to_json(const ChainComplex& c, const ConeAssignment& a);
ConeAssignment cone_from_json(const ChainComplex& c, const Json& j);

Json shelling_violation_to_json(const ChainComplex& c, const ShellingViolation& v);
Json regular_violation_to_json(const ChainComplex& c, const RegularViolation& v);
Json cone_violation_to_json(const ChainComplex& c, const ConeViolation& v);

}  // namespace ccs
