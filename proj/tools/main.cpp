#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "records.hpp"
#include "symblock/errors.hpp"

namespace {

using namespace symblock;
using records::json;

// Exit codes: 0 ok, 1 domain error, 2 undecided (search cap), 3 verification
// failure. A machine-readable error record goes to stderr whenever the exit
// status is nonzero.

struct Options {
  int p = 0;
  int depth_cap = 500;
  bool json_output = false;
  bool trace = false;
};

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << ": " << value << "\n";
}

int run_core(const std::string& partition_text, const Options& opt) {
  const Partition lambda = Partition::parse(partition_text);
  const json record = records::core_record(lambda, opt.p);
  if (opt.json_output) {
    std::cout << record.dump() << "\n";
    return 0;
  }
  print_kv("partition", lambda.str());
  print_kv("n", std::to_string(lambda.n()));
  print_kv("core", p_core(lambda, opt.p).str());
  print_kv("weight", std::to_string(p_weight(lambda, opt.p)));
  print_kv("regular", is_p_regular(lambda, opt.p) ? "true" : "false");
  return 0;
}

int run_label(const std::string& partition_text, const Options& opt) {
  const Partition lambda = Partition::parse(partition_text);
  const json record = records::label_record(lambda, opt.p);
  if (opt.json_output) {
    std::cout << record.dump() << "\n";
    return 0;
  }
  print_kv("partition", lambda.str());
  print_kv("block core", record.at("block_core").dump());
  print_kv("label", "[" + record.at("a").dump() + "," + record.at("b").dump() + "]");
  print_kv("eps", record.at("eps").dump());
  print_kv("regular", record.at("p_regular").dump());
  print_kv("route", record.at("route").is_null() ? "-" : record.at("route").get<std::string>());
  return 0;
}

int run_chain(const std::string& partition_text, const std::string& target,
              const Options& opt) {
  const Partition lambda = Partition::parse(partition_text);
  const SearchLimits limits{opt.depth_cap, 200000};
  std::optional<SemisimpleChain> chain;
  if (target == "rouquier")
    chain = induce_chain_to_rouquier(lambda, opt.p, limits);
  else
    chain = restrict_chain_to_principal(lambda, opt.p, limits);
  if (!chain) {
    const json record = records::no_chain_record(lambda, opt.p, target);
    if (opt.json_output)
      std::cout << record.dump() << "\n";
    else
      print_kv("chain", "none");
    return 0;
  }
  const json record = records::chain_record(*chain, opt.p);
  if (opt.json_output) {
    std::cout << record.dump() << "\n";
    return 0;
  }
  print_kv("start", chain->start.str() + " in block " + chain->start_block.str());
  for (const auto& step : record.at("steps"))
    std::cout << "  -> n=" << step.at("n") << " core=" << step.at("core").dump()
              << " k=" << step.at("k") << " residue=" << step.at("residue")
              << " image=" << step.at("image").dump() << "\n";
  print_kv("final block", chain->final_block().str());
  print_kv("final image", chain->final_image().str());
  return 0;
}

int run_complexity(const std::string& partition_text, const Options& opt) {
  const Partition lambda = Partition::parse(partition_text);
  const SearchLimits limits{opt.depth_cap, 200000};
  const ComplexityResult result = complexity_of(lambda, opt.p, limits);
  const json record = records::complexity_record(lambda, opt.p, result, opt.trace);
  if (opt.json_output) {
    std::cout << record.dump() << "\n";
    return 0;
  }
  print_kv("partition", lambda.str());
  if (result.exact())
    print_kv("complexity", std::to_string(result.lo));
  else
    print_kv("complexity", "[" + std::to_string(result.lo) + ", " + std::to_string(result.hi) +
                               "]");
  print_kv("justification", str(result.tag));
  if (result.chain)
    print_kv("chain length", std::to_string(result.chain->steps.size()));
  if (opt.trace)
    for (const auto& line : result.trace) std::cout << "  " << line << "\n";
  return 0;
}

int run_rankvar(const std::string& path, const Options& opt) {
  ElemAbelianModule module = [&] {
    if (path == "-") return records::parse_module_text(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open module file: " + path);
    return records::parse_module_text(in);
  }();
  const json record = records::rankvar_record(module);
  if (opt.json_output) {
    std::cout << record.dump() << "\n";
    return 0;
  }
  print_kv("p", std::to_string(module.p));
  print_kv("rank", std::to_string(module.rank()));
  print_kv("dim", std::to_string(module.dim));
  std::cout << "rational points (" << record.at("point_count") << "):\n";
  for (const auto& point : record.at("points")) std::cout << "  " << point.dump() << "\n";
  return 0;
}

int run_verify(const std::string& primes_text, const Options& opt) {
  std::vector<int> primes;
  std::istringstream in(primes_text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    primes.push_back(std::stoi(token));
  }
  if (primes.empty()) throw DomainError("verify needs at least one prime");
  const auto rows = run_verification(primes);
  if (opt.json_output) {
    std::cout << records::verify_record(rows).dump() << "\n";
  } else {
    for (const auto& row : rows)
      std::cout << row.check << " p=" << row.p << ": " << (row.passed ? "PASS" : "FAIL")
                << "  (" << row.detail << ")\n";
  }
  return all_passed(rows) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-theoretic combinatorics of symmetric groups"};
  app.require_subcommand(1);

  Options opt;

  std::string partition_text, target = "rouquier", module_path, primes_text = "3,5,7,11,13";

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_output, "emit line-delimited JSON records");
    return sub;
  };
  auto add_p = [&](CLI::App* sub) {
    add_common(sub)->add_option("-p,--prime", opt.p, "characteristic (a prime)")->required();
  };

  CLI::App* core = app.add_subcommand("core", "p-core, p-weight and regularity");
  add_p(core);
  core->add_option("partition", partition_text, "comma-separated parts, '-' for empty")
      ->required();

  CLI::App* label = app.add_subcommand("label", "weight-2 label [a,b], eps and route");
  add_p(label);
  label->add_option("partition", partition_text)->required();

  CLI::App* chain = app.add_subcommand("chain", "semisimple induction/restriction chains");
  add_p(chain);
  chain->add_option("partition", partition_text)->required();
  chain->add_option("--to", target, "chain target")
      ->check(CLI::IsMember({"rouquier", "principal"}));
  chain->add_option("--depth-cap", opt.depth_cap, "search depth cap")
      ->check(CLI::PositiveNumber);

  CLI::App* complexity = app.add_subcommand("complexity", "exact complexity oracle");
  add_p(complexity);
  complexity->add_option("partition", partition_text)->required();
  complexity->add_flag("--trace", opt.trace, "print the decision cascade");
  complexity->add_option("--depth-cap", opt.depth_cap, "search depth cap")
      ->check(CLI::PositiveNumber);

  CLI::App* rankvar = add_common(app.add_subcommand("rankvar", "rational rank-variety points"));
  rankvar->add_option("module", module_path, "module file ('-' for stdin)")->required();

  CLI::App* verify = add_common(app.add_subcommand("verify", "run the oracle sweeps"));
  verify->add_option("--primes", primes_text, "comma-separated primes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (core->parsed()) return run_core(partition_text, opt);
    if (label->parsed()) return run_label(partition_text, opt);
    if (chain->parsed()) return run_chain(partition_text, target, opt);
    if (complexity->parsed()) return run_complexity(partition_text, opt);
    if (rankvar->parsed()) return run_rankvar(module_path, opt);
    if (verify->parsed()) return run_verify(primes_text, opt);
  } catch (const symblock::UndecidedError& e) {
    std::cerr << symblock::records::error_record("undecided", e.what()).dump() << "\n";
    return 2;
  } catch (const symblock::DomainError& e) {
    std::cerr << symblock::records::error_record("domain", e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << symblock::records::error_record("internal", e.what()).dump() << "\n";
    return 1;
  }
  return 0;
}
