#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bellperm/bigint.hpp"
#include "bellperm/codes.hpp"

namespace bellperm {

/// A set partition of [n] in standard representation: each block ascending,
/// blocks ordered by ascending minima.
class SetPartition {
public:
  /// Throws InvalidArgument unless `blocks` is already standard and covers
  /// [n] exactly.
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  /// Accepts blocks in any order, elements in any order.
  static SetPartition normalized(std::vector<std::vector<int>> blocks);

  int size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// Block b, 1 <= b <= block_count().
  std::span<int const> block(int b) const { return blocks_[static_cast<std::size_t>(b - 1)]; }
  std::vector<std::vector<int>> const& blocks() const { return blocks_; }

  friend bool operator==(SetPartition const&, SetPartition const&) = default;
  friend auto operator<=>(SetPartition const&, SetPartition const&) = default;

private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

/// A restricted growth function: f_1 = 1 and f_i <= 1 + max(f_1..f_{i-1}).
class Rgf {
public:
  /// Throws NotAnRgf carrying the first bad prefix position.
  explicit Rgf(SubexceedantFunction f);
  explicit Rgf(std::vector<int> word) : Rgf(SubexceedantFunction(std::move(word))) {}
  Rgf(std::initializer_list<int> word) : Rgf(std::vector<int>(word)) {}

  int size() const { return f_.size(); }
  int operator()(int i) const { return f_(i); }
  std::span<int const> word() const { return f_.word(); }
  SubexceedantFunction const& code() const { return f_; }
  /// Largest value, i.e. the number of blocks it encodes.
  int max_value() const;

  friend bool operator==(Rgf const&, Rgf const&) = default;
  friend auto operator<=>(Rgf const&, Rgf const&) = default;

private:
  SubexceedantFunction f_;
};

/// Running-maximum test.
bool is_rgf(SubexceedantFunction const& f);
/// Prefix-image test: every {f_1..f_i} equals [p] for some p.
bool is_rgf_by_prefix_intervals(SubexceedantFunction const& f);
/// Smallest i such that {f_1..f_i} is not an interval [p], if any.
std::optional<int> first_non_interval_prefix(SubexceedantFunction const& f);

Rgf canonical_form(SetPartition const& pi);
/// Throws NotAnRgf when f codes no partition.
SetPartition from_canonical(SubexceedantFunction const& f);
SetPartition from_canonical(Rgf const& f);

/// Next RGF of the same size in lexicographic order; nullopt after 1 2 ... n.
std::optional<Rgf> rgf_successor(Rgf const& f);

/// In-place lexicographic RGF generator. Each advance() costs amortized O(1)
/// and the state is the word plus its prefix maxima.
class RgfGenerator {
public:
  explicit RgfGenerator(int n);

  /// Current word, 1-indexed values, 0-based storage.
  std::span<int const> current() const { return word_; }
  /// Steps to the successor. Returns false (state unchanged) at 1 2 ... n.
  bool advance();

private:
  std::vector<int> word_;
  std::vector<int> prefix_max_;
};

std::vector<Rgf> enumerate_rgf(int n);
void for_each_rgf(int n, std::function<void(std::span<int const>)> const& visit);

/// Partitions of [n] (with exactly k blocks when given) in lexicographic
/// order of their canonical forms. Throws InvalidArgument on bad n or k.
std::vector<SetPartition> enumerate_partitions(int n, std::optional<int> k = {});
void for_each_partition(int n, std::optional<int> k,
                        std::function<void(SetPartition const&)> const& visit);

/// Bell number B(n), B(0) = 1.
BigInt bell(int n);
/// Stirling number of the second kind; S(0,0) = 1, S(n,0) = 0 for n > 0.
/// Throws InvalidArgument when k > n or either is negative.
BigInt stirling(int n, int k);
BigInt binomial(int n, int k);

}  // namespace bellperm
