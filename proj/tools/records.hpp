#pragma once

#include <json.hpp>

#include "symblock/branching.hpp"
#include "symblock/complexity.hpp"
#include "symblock/rank_variety.hpp"
#include "symblock/verify.hpp"
#include "symblock/weight_two.hpp"

namespace symblock::records {

using nlohmann::json;

// Line-delimited records with stable field names; every record carries a
// "schema" tag so downstream scripts can dispatch without sniffing.

json core_record(const Partition& lambda, int p);
json label_record(const Partition& lambda, int p);
json chain_record(const SemisimpleChain& chain, int p);
json no_chain_record(const Partition& lambda, int p, const std::string& target);
json complexity_record(const Partition& lambda, int p, const ComplexityResult& result,
                       bool with_trace);
json rankvar_record(const ElemAbelianModule& m);
json verify_record(const std::vector<VerifyRow>& rows);
json error_record(const std::string& kind, const std::string& message);

// Round-trip parsers for the record payloads (used by the CLI tests).
Partition partition_from_record(const json& value);
std::vector<int> interval_from_complexity_record(const json& record);

// Text input format for explicit modules: a header line "p k dim" followed by
// k generator matrices given as dim rows of dim integers; '#' starts a
// comment.
ElemAbelianModule parse_module_text(std::istream& in);

}  // namespace symblock::records
