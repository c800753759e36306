#include "symblock/verify.hpp"

#include <future>
#include <numeric>

#include "symblock/errors.hpp"
#include "symblock/jordan.hpp"
#include "symblock/partition.hpp"

namespace symblock {

namespace {

VerifyRow check_jordan_tensor(int p) {
  int pairs = 0;
  bool matrix_checked = p <= 7;  // larger fields: closed-form checks only
  for (int x = 1; x < p; ++x)
    for (int y = 1; y < p; ++y) {
      const auto tensor = jordan_tensor(x, y, p);
      if (tensor.dimension() != static_cast<long long>(x) * y)
        return {"jordan-tensor", p, false,
                "dimension mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ")"};
      if (tensor != jordan_tensor(y, x, p))
        return {"jordan-tensor", p, false, "commutativity fails"};
      if (matrix_checked) {
        const auto u = unipotent_jordan_block(x, p).kronecker(unipotent_jordan_block(y, p));
        const auto from_matrix =
            jordan_type_of_nilpotent(u - FpMatrix::identity(x * y, p));
        if (from_matrix != tensor)
          return {"jordan-tensor", p, false,
                  "matrix oracle disagrees at (" + std::to_string(x) + "," +
                      std::to_string(y) + ")"};
      }
      ++pairs;
    }
  return {"jordan-tensor", p, true,
          std::to_string(pairs) + " pairs" + (matrix_checked ? ", matrix oracle" : "")};
}

VerifyRow check_diagonal_restriction(int p) {
  int cases = 0;
  for (int i = 1; i < p; ++i)
    for (int j = 1; j <= i; ++j) {
      if (diagonal_restriction(i, j, p) != diagonal_restriction_oracle(i, j, p))
        return {"diagonal-restriction", p, false,
                "closed form disagrees at (" + std::to_string(i) + "," + std::to_string(j) +
                    ")"};
      ++cases;
    }
  return {"diagonal-restriction", p, true, std::to_string(cases) + " cases"};
}

VerifyRow check_summand_count(int p) {
  int cases = 0;
  for (int b = 2; b <= p - 2; ++b)
    for (int a = b; a <= p - 2 && a + b <= p; ++a) {
      const auto middle =
          diagonal_restriction(a + 1, b, p) + diagonal_restriction(a, b - 1, p);
      if (middle_layer_summand_count(a, b, p) != middle.summand_count())
        return {"summand-count", p, false,
                "closed form disagrees at (" + std::to_string(a) + "," + std::to_string(b) +
                    ")"};
      ++cases;
    }
  return {"summand-count", p, true,
          cases ? std::to_string(cases) + " cases" : "empty range, trivially true"};
}

VerifyRow check_filtration_dimension(int p) {
  int cases = 0;
  for (int b = 2; b <= p - 2; ++b)
    for (int a = b; a <= p - 2 && a + b <= p; ++a) {
      const long long expected = 2 * diagonal_restriction(a, b, p).dimension() +
                                 diagonal_restriction(a + 1, b, p).dimension() +
                                 diagonal_restriction(a, b - 1, p).dimension();
      if (filtration_dimension(a, b, p) != expected)
        return {"filtration-dimension", p, false,
                "closed form disagrees at (" + std::to_string(a) + "," + std::to_string(b) +
                    ")"};
      ++cases;
    }
  return {"filtration-dimension", p, true,
          cases ? std::to_string(cases) + " cases" : "empty range, trivially true"};
}

VerifyRow check_obstruction(int p) {
  if (p == 2) return {"obstruction", p, true, "not applicable at p=2"};
  int cases = 0;
  for (int b = 1; b <= p - 1; ++b)
    for (int a = b; a <= p - 1; ++a) {
      if (a == p - 1 && b == 1) continue;  // the complexity-one hook
      const auto verdict = freeness_obstruction(a, b, p);
      switch (verdict.kind) {
        case ObstructionKind::NotFreeByDimension:
          if (std::gcd(verdict.dimension, static_cast<long long>(p)) != 1)
            return {"obstruction", p, false, "dimension certificate divisible by p"};
          break;
        case ObstructionKind::NotFreeByCount:
          if (verdict.summands * p <= verdict.filtered_dim)
            return {"obstruction", p, false, "count certificate fails"};
          break;
        case ObstructionKind::ReducedBySignTwist: {
          const auto [ra, rb] = verdict.reduced_label;
          const auto reduced = freeness_obstruction(ra, rb, p);
          if (reduced.kind == ObstructionKind::ReducedBySignTwist)
            return {"obstruction", p, false, "sign twist does not reduce"};
          break;
        }
      }
      ++cases;
    }
  return {"obstruction", p, true, std::to_string(cases) + " labels"};
}

VerifyRow check_hook_dimension(int p) {
  if (p == 2) return {"hook-dimension", p, true, "empty range, trivially true"};
  int cases = 0;
  for (int b = 2; b < p; ++b) {
    if (std::gcd(hook_simple_dimension(p, b), static_cast<long long>(p)) != 1)
      return {"hook-dimension", p, false, "binomial divisible by p at b=" + std::to_string(b)};
    ++cases;
  }
  return {"hook-dimension", p, true, std::to_string(cases) + " binomials coprime to p"};
}

}  // namespace

std::vector<VerifyRow> run_verification(const std::vector<int>& primes) {
  for (int p : primes) require_prime(p);
  std::vector<std::future<VerifyRow>> futures;
  for (int p : primes) {
    futures.push_back(std::async(std::launch::async, check_jordan_tensor, p));
    futures.push_back(std::async(std::launch::async, check_diagonal_restriction, p));
    futures.push_back(std::async(std::launch::async, check_summand_count, p));
    futures.push_back(std::async(std::launch::async, check_filtration_dimension, p));
    futures.push_back(std::async(std::launch::async, check_obstruction, p));
    futures.push_back(std::async(std::launch::async, check_hook_dimension, p));
  }
  std::vector<VerifyRow> rows;
  rows.reserve(futures.size());
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

bool all_passed(const std::vector<VerifyRow>& rows) {
  for (const auto& row : rows)
    if (!row.passed) return false;
  return true;
}

}  // namespace symblock
