#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symcanon/basechange.hpp"
#include "symcanon/canonical.hpp"
#include "symcanon/normalform.hpp"
#include "symcanon/paramgen.hpp"

namespace symcanon {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ContractError with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");
/// Reads a file, or standard input for "-".
std::string read_text(const std::string& path);
/// Writes a file, or standard output for "-".
void write_text(const std::string& path, const std::string& text);

Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);

Json tableau_to_json(const SymmetricTableau& T);
/// Validates shape, polynomial syntax and symmetry; messages name the entry.
SymmetricTableau tableau_from_json(const Json& j);

Json ideal_to_json(const Ideal& I, bool reduced_basis = true);
Ideal ideal_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldSpec& field);

Json move_to_json(const OpMove& m);
OpMove move_from_json(const Json& j, const FieldSpec& field);
Json moves_to_json(const std::vector<OpMove>& moves);
std::vector<OpMove> moves_from_json(const Json& j, const FieldSpec& field);

Json params_to_json(const ParameterPoint& p);
ParameterPoint params_from_json(const Json& j);

Json cert_to_json(const BaseChangeCert& c);
Json ledger_to_json(const DimensionLedger& l);
Json invariants_to_json(const SurfaceInvariants& s);
Json jacobian_to_json(const JacobianCheck& c);
Json reflexivity_to_json(const ReflexivityReport& r);
Json table_to_json(const MultiplicationTable& t);

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);
CheckStatus status_from_string(const std::string& s);

enum class ReportFormat { text, json };
std::string render_report(const VerificationReport& r, ReportFormat format);

}  // namespace symcanon
