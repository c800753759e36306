#include "records.hpp"

#include <istream>
#include <sstream>

#include "symblock/errors.hpp"

namespace symblock::records {

namespace {

json partition_json(const Partition& lambda) { return json(lambda.parts()); }

json block_json(const BlockId& b) {
  return json{{"p", b.p}, {"core", partition_json(b.core)}, {"weight", b.weight}, {"n", b.n()}};
}

json chain_steps_json(const SemisimpleChain& chain) {
  json steps = json::array();
  const bool induce = chain.direction == ChainDirection::Induce;
  for (const auto& step : chain.steps) {
    const BlockId& arrived = induce ? step.pair.upper : step.pair.lower;
    steps.push_back(json{{"n", arrived.n()},
                         {"core", partition_json(arrived.core)},
                         {"k", step.pair.k},
                         {"residue", step.pair.residue},
                         {"image", partition_json(step.image)},
                         {"exceptional", false}});
  }
  return steps;
}

}  // namespace

json core_record(const Partition& lambda, int p) {
  return json{{"schema", "symblock/core/1"},
              {"parts", partition_json(lambda)},
              {"n", lambda.n()},
              {"p", p},
              {"p_core", partition_json(p_core(lambda, p))},
              {"p_weight", p_weight(lambda, p)},
              {"p_regular", is_p_regular(lambda, p)}};
}

json label_record(const Partition& lambda, int p) {
  const auto label = label_of(lambda, p);
  json record{{"schema", "symblock/label/1"},
              {"partition", partition_json(lambda)},
              {"p", p},
              {"block_core", partition_json(label.block.core)},
              {"a", label.a},
              {"b", label.b},
              {"eps", label.eps},
              {"p_regular", is_p_regular(lambda, p)}};
  if (is_p_regular(lambda, p))
    record["route"] = str(route_of(lambda, p));
  else
    record["route"] = nullptr;
  return record;
}

json chain_record(const SemisimpleChain& chain, int p) {
  return json{{"schema", "symblock/chain/1"},
              {"p", p},
              {"found", true},
              {"direction", chain.direction == ChainDirection::Induce ? "induce" : "restrict"},
              {"start", partition_json(chain.start)},
              {"start_block", block_json(chain.start_block)},
              {"steps", chain_steps_json(chain)},
              {"final_block", block_json(chain.final_block())},
              {"final_image", partition_json(chain.final_image())},
              {"length", chain.steps.size()}};
}

json no_chain_record(const Partition& lambda, int p, const std::string& target) {
  return json{{"schema", "symblock/chain/1"},
              {"p", p},
              {"found", false},
              {"start", partition_json(lambda)},
              {"target", target}};
}

json complexity_record(const Partition& lambda, int p, const ComplexityResult& result,
                       bool with_trace) {
  json record{{"schema", "symblock/complexity/1"},
              {"partition", partition_json(lambda)},
              {"p", p},
              {"justification", str(result.tag)}};
  if (result.exact())
    record["value"] = result.lo;
  else
    record["interval"] = json::array({result.lo, result.hi});
  if (result.chain) record["chain"] = chain_record(*result.chain, p);
  if (with_trace) record["trace"] = result.trace;
  return record;
}

json rankvar_record(const ElemAbelianModule& m) {
  const auto points = rational_points(m);
  return json{{"schema", "symblock/rankvar/1"},
              {"p", m.p},
              {"rank", m.rank()},
              {"dim", m.dim},
              {"points", json(points)},
              {"point_count", points.size()}};
}

json verify_record(const std::vector<VerifyRow>& rows) {
  json out = json::array();
  for (const auto& row : rows)
    out.push_back(json{{"check", row.check},
                       {"p", row.p},
                       {"passed", row.passed},
                       {"detail", row.detail}});
  return json{{"schema", "symblock/verify/1"}, {"rows", out}, {"passed", all_passed(rows)}};
}

json error_record(const std::string& kind, const std::string& message) {
  return json{{"schema", "symblock/error/1"}, {"kind", kind}, {"message", message}};
}

Partition partition_from_record(const json& value) {
  std::vector<int> parts;
  for (const auto& part : value) parts.push_back(part.get<int>());
  return Partition(std::move(parts));
}

std::vector<int> interval_from_complexity_record(const json& record) {
  if (record.contains("value")) {
    const int v = record.at("value").get<int>();
    return {v, v};
  }
  return {record.at("interval").at(0).get<int>(), record.at("interval").at(1).get<int>()};
}

ElemAbelianModule parse_module_text(std::istream& in) {
  std::vector<int> numbers;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    int value;
    while (tokens >> value) numbers.push_back(value);
  }
  if (numbers.size() < 3) throw DomainError("module input needs a 'p k dim' header");
  const int p = numbers[0], k = numbers[1], dim = numbers[2];
  if (k < 1 || dim < 1) throw DomainError("module input needs k >= 1 and dim >= 1");
  const size_t expected = 3 + static_cast<size_t>(k) * dim * dim;
  if (numbers.size() != expected)
    throw DomainError("module input needs exactly k*dim*dim matrix entries");
  std::vector<FpMatrix> generators;
  size_t at = 3;
  for (int g = 0; g < k; ++g) {
    FpMatrix m(dim, dim, p);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m.set(r, c, numbers[at++]);
    generators.push_back(std::move(m));
  }
  return make_module(p, std::move(generators));
}

}  // namespace symblock::records
