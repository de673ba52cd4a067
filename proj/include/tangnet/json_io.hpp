// json_io.hpp
// Stable JSON renderings of the report types. Objects are map-backed, so
// keys serialize sorted; numbers are IEEE-754 doubles; entropy terms in bits.

#pragma once

#include <json.hpp>

#include "tangnet/infometrics.hpp"
#include "tangnet/notation.hpp"
#include "tangnet/structure.hpp"
#include "tangnet/symmetry.hpp"

namespace tangnet {

using Json = nlohmann::json;

Json report_json(const MutualInfoReport& report);
Json verdict_json(const SymmetryVerdict& verdict);
Json summary_json(const OutInSummary& summary);
Json structure_json(const QuantumStructure& qs);
Json structure_class_json(const StructureClass& cls);
Json enumeration_json(const QubitClassEnumeration& e);
Json schmidt_json(const SchmidtDecomposition& sd);
Json document_json(const SpecDocument& doc);
Json matrix_json(const CMatrix& m);

} // namespace tangnet
