#include "bellperm/partitions.hpp"

#include <algorithm>
#include <string>

#include "bellperm/errors.hpp"

namespace bellperm {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidArgument("partition with no blocks");
  std::size_t total = 0;
  for (auto const& b : blocks_) {
    if (b.empty()) throw InvalidArgument("empty block");
    total += b.size();
  }
  n_ = static_cast<int>(total);
  std::vector<bool> seen(total + 1, false);
  int previous_min = 0;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    auto const& b = blocks_[bi];
    if (b.front() <= previous_min)
      throw InvalidArgument("block " + std::to_string(bi + 1) +
                            " is out of order: minima must increase");
    previous_min = b.front();
    for (std::size_t j = 0; j < b.size(); ++j) {
      int const x = b[j];
      if (x < 1 || x > n_)
        throw InvalidArgument("element " + std::to_string(x) + " outside [1, " +
                              std::to_string(n_) + "]");
      if (seen[static_cast<std::size_t>(x)])
        throw InvalidArgument("element " + std::to_string(x) + " repeated");
      seen[static_cast<std::size_t>(x)] = true;
      if (j > 0 && b[j - 1] >= x)
        throw InvalidArgument("block " + std::to_string(bi + 1) + " is not ascending");
    }
  }
}

SetPartition SetPartition::normalized(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](auto const& a, auto const& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return SetPartition(std::move(blocks));
}

namespace {

void check_rgf(SubexceedantFunction const& f) {
  if (auto bad = first_non_interval_prefix(f))
    throw NotAnRgf("prefix of length " + std::to_string(*bad) +
                       " has an image that is not an interval [p]",
                   *bad);
}

}  // namespace

Rgf::Rgf(SubexceedantFunction f) : f_(std::move(f)) { check_rgf(f_); }

int Rgf::max_value() const { return *std::max_element(word().begin(), word().end()); }

bool is_rgf(SubexceedantFunction const& f) {
  int running_max = 0;
  for (int v : f.word()) {
    if (v > running_max + 1) return false;
    running_max = std::max(running_max, v);
  }
  return true;
}

std::optional<int> first_non_interval_prefix(SubexceedantFunction const& f) {
  // The prefix image is [p] exactly when it holds p distinct values whose
  // maximum is p.
  std::vector<bool> seen(static_cast<std::size_t>(f.size()) + 1, false);
  int distinct = 0;
  int largest = 0;
  for (int i = 1; i <= f.size(); ++i) {
    int const v = f(i);
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++distinct;
    }
    largest = std::max(largest, v);
    if (largest != distinct) return i;
  }
  return std::nullopt;
}

bool is_rgf_by_prefix_intervals(SubexceedantFunction const& f) {
  return !first_non_interval_prefix(f).has_value();
}

Rgf canonical_form(SetPartition const& pi) {
  std::vector<int> f(static_cast<std::size_t>(pi.size()));
  for (int b = 1; b <= pi.block_count(); ++b)
    for (int x : pi.block(b)) f[static_cast<std::size_t>(x - 1)] = b;
  return Rgf(std::move(f));
}

SetPartition from_canonical(SubexceedantFunction const& f) {
  check_rgf(f);
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= f.size(); ++j) {
    auto const b = static_cast<std::size_t>(f(j));
    if (b > blocks.size()) blocks.resize(b);
    blocks[b - 1].push_back(j);
  }
  return SetPartition(std::move(blocks));
}

SetPartition from_canonical(Rgf const& f) { return from_canonical(f.code()); }

RgfGenerator::RgfGenerator(int n) {
  if (n < 1) throw InvalidArgument("RGF size " + std::to_string(n) + " < 1");
  word_.assign(static_cast<std::size_t>(n), 1);
  prefix_max_.assign(static_cast<std::size_t>(n), 1);
}

bool RgfGenerator::advance() {
  // Rightmost position that may still grow: word[i] <= max(word[0..i-1]).
  auto i = word_.size();
  while (--i > 0) {
    if (word_[i] <= prefix_max_[i - 1]) break;
  }
  if (i == 0) return false;
  ++word_[i];
  int const m = std::max(prefix_max_[i - 1], word_[i]);
  prefix_max_[i] = m;
  for (auto j = i + 1; j < word_.size(); ++j) {
    word_[j] = 1;
    prefix_max_[j] = m;
  }
  return true;
}

std::optional<Rgf> rgf_successor(Rgf const& f) {
  // Rebuild the generator state from f; advance() then does the step.
  auto const w = f.word();
  std::vector<int> next(w.begin(), w.end());
  int running = 0;
  std::vector<int> prefix_max(next.size());
  for (std::size_t j = 0; j < next.size(); ++j) {
    running = std::max(running, next[j]);
    prefix_max[j] = running;
  }
  auto i = next.size();
  while (--i > 0) {
    if (next[i] <= prefix_max[i - 1]) break;
  }
  if (i == 0) return std::nullopt;
  ++next[i];
  std::fill(next.begin() + static_cast<std::ptrdiff_t>(i) + 1, next.end(), 1);
  return Rgf(std::move(next));
}

void for_each_rgf(int n, std::function<void(std::span<int const>)> const& visit) {
  RgfGenerator gen(n);
  do {
    visit(gen.current());
  } while (gen.advance());
}

std::vector<Rgf> enumerate_rgf(int n) {
  std::vector<Rgf> out;
  for_each_rgf(n, [&](std::span<int const> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

void for_each_partition(int n, std::optional<int> k,
                        std::function<void(SetPartition const&)> const& visit) {
  if (n < 1) throw InvalidArgument("partition size " + std::to_string(n) + " < 1");
  if (k && (*k < 1 || *k > n))
    throw InvalidArgument("block count " + std::to_string(*k) + " outside [1, " +
                          std::to_string(n) + "]");
  for_each_rgf(n, [&](std::span<int const> w) {
    if (k && *std::max_element(w.begin(), w.end()) != *k) return;
    visit(from_canonical(SubexceedantFunction(std::vector<int>(w.begin(), w.end()))));
  });
}

std::vector<SetPartition> enumerate_partitions(int n, std::optional<int> k) {
  std::vector<SetPartition> out;
  for_each_partition(n, k, [&](SetPartition const& p) { out.push_back(p); });
  return out;
}

namespace {

// S(n, 0..n) via S(m, j) = j S(m-1, j) + S(m-1, j-1).
std::vector<BigInt> stirling_row(int n) {
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = m; j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    row[0] = 0;
  }
  return row;
}

}  // namespace

BigInt stirling(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("negative argument to stirling");
  if (k > n)
    throw InvalidArgument("stirling(" + std::to_string(n) + ", " + std::to_string(k) +
                          "): k > n");
  return stirling_row(n)[static_cast<std::size_t>(k)];
}

BigInt bell(int n) {
  if (n < 0) throw InvalidArgument("bell(" + std::to_string(n) + ")");
  BigInt sum = 0;
  for (auto const& s : stirling_row(n)) sum += s;
  return sum;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace bellperm
