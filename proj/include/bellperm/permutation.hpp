#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bellperm {

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-indexed on every interface; storage is a plain 0-based vector.
class Permutation {
public:
  /// Throws InvalidArgument unless `word` is a bijection of [n], n >= 1.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// sigma(i), 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<int const> word() const { return word_; }

  Permutation inverse() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  friend Permutation make_unchecked(std::vector<int>);

  std::vector<int> word_;
};

/// Skips validation. Only for words already known to be bijections.
Permutation make_unchecked(std::vector<int> word);

/// Disjoint cycles, each starting at its minimum, sorted by minima.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::size_t count() const { return cycles.size(); }
  friend bool operator==(CycleDecomposition const&,
                         CycleDecomposition const&) = default;
};

CycleDecomposition cycle_decomposition(Permutation const& sigma);

/// Each cycle maps element -> next element and last -> first. Elements of
/// [n] missing from every cycle are fixed points; n defaults to the largest
/// element mentioned. Throws InvalidArgument on repeated or non-positive
/// elements, or elements above n.
Permutation from_cycles(std::vector<std::vector<int>> const& cycles, int n = 0);

/// The same cycles, each rotated to start at its maximum. Cycle order (by
/// minima) is unchanged.
std::vector<std::vector<int>> max_first(CycleDecomposition const& cd);

/// Positions i with sigma(i) >= i, ascending.
std::vector<int> weak_exceedances(Permutation const& sigma);

/// sigma(i) over the weak-exceedance positions, in position order.
std::vector<int> weak_exceedance_letters(Permutation const& sigma);

/// Inverse nearest orbital minorant: the first element <= x on the walk
/// sigma^-1(x), sigma^-2(x), ... (x itself at the latest).
int inom(Permutation const& sigma, int x);

class SubexceedantFunction;

/// inom(1) ... inom(n).
SubexceedantFunction inom_table(Permutation const& sigma);

/// Positions x where inom(x) takes a value not seen at any smaller position.
std::vector<int> seq(Permutation const& sigma);

struct WeakExcProfile {
  std::vector<int> positions;
  std::vector<int> letters;
  std::vector<int> seq;
};

WeakExcProfile weak_exc_profile(Permutation const& sigma);

}  // namespace bellperm
