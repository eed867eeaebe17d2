#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bochnerlab/catalog.hpp"
#include "bochnerlab/diffop.hpp"
#include "bochnerlab/recurrence.hpp"
#include "bochnerlab/shiftop.hpp"
#include "bochnerlab/symbolic.hpp"

namespace bochnerlab {

// All JSON output carries "schema": 1 and serializes rationals as "p/q"
// strings; maps use nlohmann's ordered (sorted-key) object representation
// for byte-identical output on identical inputs.
using Json = nlohmann::json;

std::string rational_str(const Rational& r);

// Operator spec document:
//   { "vars": ["a31", ...], "coeffs": { "1": "<expr>", "2": "<expr>" } }
// Keys of "coeffs" are derivative orders; expressions use the variables x
// and the declared names. Concrete loading substitutes the bindings (which
// must cover every declared variable); symbolic loading keeps them free.
DiffOp load_operator(const Json& doc,
                     const std::map<std::string, Rational>& bindings);
SymbolicAnsatz load_symbolic_ansatz(const Json& doc);
Json operator_to_json(const DiffOp& op);

Json eigenseq_to_json(const EigenSeq& seq);
Json rectable_to_json(const RecTable& table);
std::string rectable_to_csv(const RecTable& table);
Json certificate_to_json(const AdCertificate& cert);
Json constraints_to_json(const std::vector<Constraint>& constraints);

// FamilySpec from "name" plus "key=value" argument strings.
FamilySpec parse_family(const std::string& name,
                        const std::vector<std::string>& args);
Json family_to_operator_json(const FamilySpec& spec);

}  // namespace bochnerlab
