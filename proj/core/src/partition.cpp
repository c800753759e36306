#include "symblock/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "symblock/errors.hpp"

namespace symblock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "-") return Partition{};
  std::vector<int> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw DomainError("cannot parse partition part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::n() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw DomainError("partition parts are 1-indexed");
  return i <= length() ? parts_[i - 1] : 0;
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(static_cast<size_t>(lambda.parts()[0]), 0);
  for (int part : lambda.parts())
    for (int c = 0; c < part; ++c) ++cols[c];
  return Partition(std::move(cols));
}

std::vector<int> beta_numbers(const Partition& lambda, int s) {
  if (s < lambda.length())
    throw DomainError("invalid bead count: s = " + std::to_string(s) + " < length " +
                      std::to_string(lambda.length()));
  std::vector<int> betas(static_cast<size_t>(s));
  for (int i = 1; i <= s; ++i) betas[i - 1] = lambda.part(i) + s - i;
  return betas;
}

Partition partition_from_beta(const std::vector<int>& betas) {
  const int s = static_cast<int>(betas.size());
  std::vector<int> parts;
  parts.reserve(betas.size());
  for (int i = 1; i <= s; ++i) {
    const int beta = betas[i - 1];
    if (beta < 0) throw DomainError("invalid beta sequence: negative entry");
    if (i > 1 && betas[i - 2] <= beta)
      throw DomainError("invalid beta sequence: not strictly decreasing");
    parts.push_back(beta - s + i);
  }
  return Partition(std::move(parts));
}

bool is_p_regular(const Partition& lambda, int p) {
  require_prime(p);
  int run = 1;
  for (int i = 1; i < lambda.length(); ++i) {
    run = (lambda.parts()[i] == lambda.parts()[i - 1]) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) throw DomainError("p must be a prime >= 2, got " + std::to_string(p));
}

namespace {

int hook_length(const Partition& lambda, const Partition& conj, int row, int col) {
  return lambda.part(row) - col + conj.part(col) - row + 1;
}

}  // namespace

std::vector<RimHookCell> removable_rim_hooks(const Partition& lambda, int p) {
  require_prime(p);
  std::vector<RimHookCell> cells;
  const Partition conj = conjugate(lambda);
  for (int row = 1; row <= lambda.length(); ++row)
    for (int col = 1; col <= lambda.part(row); ++col)
      if (hook_length(lambda, conj, row, col) == p) cells.push_back({row, col});
  return cells;
}

Partition remove_rim_hook(const Partition& lambda, int p, RimHookCell cell) {
  const Partition conj = conjugate(lambda);
  if (cell.row < 1 || cell.col < 1 || cell.col > lambda.part(cell.row))
    throw DomainError("rim hook cell outside the diagram");
  if (hook_length(lambda, conj, cell.row, cell.col) != p)
    throw DomainError("cell does not have hook length p");
  // Strip the rim strip running from (row, lambda_row) around to (q, col):
  // rows row..q-1 take the next row's length minus one, row q is cut at col-1.
  const int q = conj.part(cell.col);
  std::vector<int> parts = lambda.parts();
  for (int i = cell.row; i < q; ++i) parts[i - 1] = lambda.part(i + 1) - 1;
  parts[q - 1] = cell.col - 1;
  return Partition(std::move(parts));
}

std::pair<Partition, int> core_by_rim_hook_stripping(const Partition& lambda, int p) {
  Partition current = lambda;
  int removed = 0;
  for (;;) {
    auto cells = removable_rim_hooks(current, p);
    if (cells.empty()) return {current, removed};
    current = remove_rim_hook(current, p, cells.front());
    ++removed;
  }
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    emit_partitions(remaining - part, part, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_partitions(n, n == 0 ? 1 : n, stack, out);
  return out;
}

}  // namespace symblock
