// diagram.hpp
// Deterministic DOT and SVG text emitters for quantum structures and for the
// partition-model boxes. Output is byte-stable for identical input, so golden
// files pin it exactly. The SVG subset uses only line, circle, and text
// elements; boxes are drawn as four lines.

#pragma once

#include <map>
#include <string>

#include "tangnet/structure.hpp"

namespace tangnet {

enum class DiagramFormat { Dot, Svg };

DiagramFormat diagram_format_from_name(const std::string& name);

struct DiagramDoc {
    DiagramFormat format;
    std::string body;
    // branch index -> edge id in the body (structure diagrams only)
    std::map<std::size_t, std::string> edge_ids;
};

// One glyph per occupied node (filled dot for even-indexed parties, open
// circle for odd), one edge per branch labeled with its length and
// orientation.
DiagramDoc emit_structure_diagram(const QuantumStructure& qs, DiagramFormat format);

// Nested-box rendering of a partition model: the universe box contains the
// role boxes (S inside E1 inside E0 for model-b; the two system+environment
// clusters plus E0 for model-c).
DiagramDoc emit_partition_diagram(const PartitionModel& model, DiagramFormat format);

// Minimal smoke validation of emitted text: balanced braces/tags, node ids
// declared before use (DOT), and only the allowed SVG elements. Throws
// StructureError on violation.
void validate_diagram(const DiagramDoc& doc);

} // namespace tangnet
