#pragma once

// JSON forms of the data model and of every report.
//
// Pair file:
//   {"field_kind":"number",
//    "csa":{"degree":24,"invariants":[{"place":"v1","kind":"finite","num":1,"den":4}, ...]},
//    "etale":{"degree":8,"decompositions":[{"place":"v1","partition":[2,2,2,2]}, ...]}}
//
// Unknown fields are rejected.  Invariants are reduced and partitions sorted on
// read.  A decomposition may carry "kind"; when absent it inherits the kind of
// the same place in "invariants", else "finite".  Output is canonical: places
// sorted by id, object keys sorted, "kind" on decompositions only when not
// finite.  Integers beyond 64 bits are written as decimal strings.

#include "csa_embed/brauer.hpp"
#include "csa_embed/embed.hpp"
#include "csa_embed/hasse.hpp"
#include "csa_embed/model.hpp"
#include "csa_embed/oracle.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace csa_embed {

using json = nlohmann::json;

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

void to_json(json& j, const QZ& q);
void from_json(const json& j, QZ& q);
void to_json(json& j, const Rat& r);

struct PairDocument {
    CsaSpec csa;
    EtaleSpec etale;
};

/// Structural parse only; throws Error(malformed_input) on shape errors.
PairDocument parse_pair_document(const json& j);
/// Parse and validate.
Pair pair_from_json(const json& j);
json pair_to_json(const Pair& pair);
json document_to_json(const PairDocument& doc);

/// Reads a pair file.  Throws Error(malformed_input) on I/O or syntax errors.
Pair read_pair_file(const std::string& path);

json to_json(const CapacityChain& chain);
json to_json(const LocalClassSet& set);
json to_json(const SpecialVector& vec);
json to_json(const Obstruction& obs);
json to_json(const PairVerdict& verdict);
json to_json(const LdEntry& entry);
json to_json(const HasseVerdict& verdict);
json to_json(const oracle::CrossCheckReport& report);

}  // namespace csa_embed
