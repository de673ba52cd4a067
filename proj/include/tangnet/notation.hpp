// notation.hpp
// The textual DSL for systems, states, and role assignments.
//
//   doc    := header? system state* roles?
//   header := "tangnet-spec" "v1"
//   system := "system" IDENT "{" party ("," party)* "}"
//   party  := IDENT ":" INT
//   state  := "state" IDENT "=" term ("+" term)* ";"
//   term   := amp "|" INT ("," INT)* ">"
//   amp    := SIGNED_FLOAT | "(" SIGNED_FLOAT ("+"|"-") FLOAT "i" ")"
//   roles  := "roles" "{" (IDENT ":" ROLE ";")+ "}"
//   ROLE   := "S" | "S1" | "S2" | "E0" | "E1" | "E2"
//
// Files use UTF-8 and the .tgn suffix. Diagnostics carry line, column, and
// the token set that would have been accepted. parse(format(doc)) is
// structurally identical to doc with bit-exact amplitudes.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tangnet/states.hpp"

namespace tangnet {

struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 0;
};

struct StateTerm {
    Complex amplitude;
    std::vector<std::size_t> indices; // one per party, in declaration order
    SourcePos pos;
};

struct StateDecl {
    std::string name;
    std::vector<StateTerm> terms;
    SourcePos pos;
};

struct SpecDocument {
    std::string system_name;
    std::vector<Party> parties;
    std::vector<StateDecl> states;
    std::optional<std::map<std::string, Role>> roles;
    bool had_header = false;
};

struct ParseOptions {
    // Accept states whose norm deviates from 1 by more than 1e-6 (they are
    // renormalized when turned into a PureState). Off-norm states are
    // otherwise rejected with a diagnostic.
    bool allow_off_norm = false;
};

SpecDocument parse(const std::string& source, const ParseOptions& options = {});

// Canonical text form; emits the version header and shortest round-tripping
// number literals.
std::string format_document(const SpecDocument& doc);

// Ignores source positions and header presence; amplitudes compare bit-exact.
bool structurally_equal(const SpecDocument& a, const SpecDocument& b);

// Build the named state (first declared when name is empty). Amplitudes are
// normalized onto the unit sphere; the parse-time gate guarantees the
// correction is within the accepted tolerance unless allow_off_norm was set.
PureState to_pure_state(const SpecDocument& doc, const std::string& name = "");

// Partition model from the roles block; throws if the document has none.
PartitionModel partition_from_document(const SpecDocument& doc);

} // namespace tangnet
