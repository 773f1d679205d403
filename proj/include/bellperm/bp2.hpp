#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bellperm/bigint.hpp"
#include "bellperm/permutation.hpp"

namespace bellperm {

/// Why a permutation failed the weak-exceedance characterization.
struct Bp2Witness {
  enum class Kind {
    /// The inom code's image is not [k]; `index` is the first prefix length
    /// of the code whose image is not an interval.
    NonIntervalPrefix,
    /// seq()[index] > letters[index] (1-based index).
    SeqExceedsLetter,
    /// The code's value at seq()[index] is not index: the leftmost
    /// occurrences of the code's values are out of order.
    SeqOutOfOrder,
  };
  Kind kind;
  int index;
};

struct Bp2Certificate {
  int k = 0;
  std::vector<int> letters;  // weak exceedance letters alpha_1..alpha_k
  std::vector<int> seq;      // gamma_1..gamma_k
  bool verdict = false;
  std::optional<Bp2Witness> witness;
};

/// The inom code is an RGF.
bool is_bp2_by_code(Permutation const& sigma);

/// Weak exceedances form [k] and seq_i <= letter_i for every i.
Bp2Certificate is_bp2_by_characterization(Permutation const& sigma);

/// Weak exceedances form [k] at every level of the reduction chain.
bool is_bp2_by_reduction(Permutation const& sigma);

/// Default recognizer.
inline bool is_bp2(Permutation const& sigma) { return is_bp2_by_code(sigma); }

/// Replaces sigma'(i) by n and appends sigma'(i); for i = n appends n.
/// Throws NotBp2 if `parent` is not BP2, InvalidArgument unless 1 <= i <= k+1.
Permutation extend(Permutation const& parent, int i);

/// Inverse of extend(). Throws NotBp2 if sigma is not BP2 and
/// InvalidArgument when n = 1.
std::pair<Permutation, int> reduce(Permutation const& sigma);

/// Drops the last entry, replacing n by sigma(n) among the others. Defined for
/// every permutation of size >= 2.
Permutation reduce_unchecked(Permutation const& sigma);

/// BP2 permutations of [n] (with k weak exceedances when given), in the
/// order of the extend() tree: parent order, then i ascending.
std::vector<Permutation> enumerate_bp2(int n, std::optional<int> k = {});
void for_each_bp2(int n, std::optional<int> k,
                  std::function<void(Permutation const&)> const& visit);

/// b(n,k) from b(n,k) = k b(n-1,k) + b(n-1,k-1).
BigInt count_bp2(int n, int k);

/// #{sigma in BP2(n,k) : sigma(k) = n, sigma(n) < k}, by enumeration.
/// Requires n >= 2 and 1 < k < n.
long long count_singleton_class(int n, int k);

}  // namespace bellperm
