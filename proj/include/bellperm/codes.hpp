#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bellperm/permutation.hpp"

namespace bellperm {

/// A word f_1 ... f_n with 1 <= f_i <= i.
class SubexceedantFunction {
public:
  /// Throws InvalidArgument naming the first offending position.
  explicit SubexceedantFunction(std::vector<int> word);
  SubexceedantFunction(std::initializer_list<int> word)
      : SubexceedantFunction(std::vector<int>(word)) {}

  /// 1 2 ... n
  static SubexceedantFunction identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<int const> word() const { return word_; }

  friend bool operator==(SubexceedantFunction const&,
                         SubexceedantFunction const&) = default;
  friend auto operator<=>(SubexceedantFunction const&,
                          SubexceedantFunction const&) = default;

private:
  std::vector<int> word_;
};

/// (1 f_1)(2 f_2)...(n f_n), the leftmost transposition acting first.
Permutation phi(SubexceedantFunction const& f);

/// (n f_n)(n-1 f_{n-1})...(1 f_1), the leftmost transposition acting first.
Permutation phi_tilde(SubexceedantFunction const& f);

SubexceedantFunction phi_inv(Permutation const& sigma);

/// The inom code. Computed by peeling transpositions off sigma, so it is an
/// independent route to the same word as inom_table().
SubexceedantFunction phi_tilde_inv(Permutation const& sigma);

/// Distinct values of f, ascending.
std::vector<int> image(SubexceedantFunction const& f);
int ima(SubexceedantFunction const& f);

/// Replaces each value by its rank among the distinct values of f.
SubexceedantFunction nu(SubexceedantFunction const& f);

/// Replaces each value v by the leftmost position j with f_j = v.
SubexceedantFunction zeta(SubexceedantFunction const& f);

}  // namespace bellperm
