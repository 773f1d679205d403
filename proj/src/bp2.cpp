#include "bellperm/bp2.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bellperm/codes.hpp"
#include "bellperm/errors.hpp"
#include "bellperm/partitions.hpp"

namespace bellperm {

namespace {

// Number of weak exceedances if they form [k], otherwise nullopt.
std::optional<int> weak_exceedance_interval(std::span<int const> word) {
  int k = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    int const pos = static_cast<int>(i) + 1;
    if (word[i] >= pos) {
      if (k != pos - 1) return std::nullopt;
      k = pos;
    }
  }
  return k;
}

void require_bp2(Permutation const& sigma, char const* op) {
  if (!is_bp2_by_code(sigma))
    throw NotBp2(std::string(op) + ": permutation is not a Bell permutation of the second kind");
}

}  // namespace

bool is_bp2_by_code(Permutation const& sigma) { return is_rgf(phi_tilde_inv(sigma)); }

Bp2Certificate is_bp2_by_characterization(Permutation const& sigma) {
  Bp2Certificate cert;
  cert.letters = weak_exceedance_letters(sigma);
  cert.seq = seq(sigma);
  cert.k = static_cast<int>(cert.letters.size());

  if (!weak_exceedance_interval(sigma.word())) {
    auto const bad = first_non_interval_prefix(inom_table(sigma));
    cert.witness = Bp2Witness{Bp2Witness::Kind::NonIntervalPrefix,
                              bad.value_or(sigma.size())};
    return cert;
  }
  // |Seq| = |w-Exc| for every permutation; the pairing below relies on it.
  for (int i = 0; i < cert.k; ++i) {
    int const gamma = static_cast<std::size_t>(i) < cert.seq.size()
                          ? cert.seq[static_cast<std::size_t>(i)]
                          : std::numeric_limits<int>::max();
    if (gamma > cert.letters[static_cast<std::size_t>(i)]) {
      cert.witness = Bp2Witness{Bp2Witness::Kind::SeqExceedsLetter, i + 1};
      return cert;
    }
  }
  // The inequality alone admits e.g. 2 4 5 1 3 (code 1 1 3 2 3). The code is
  // an RGF exactly when its leftmost occurrences come in value order.
  auto const code = inom_table(sigma);
  for (int i = 0; i < cert.k; ++i) {
    if (code(cert.seq[static_cast<std::size_t>(i)]) != i + 1) {
      cert.witness = Bp2Witness{Bp2Witness::Kind::SeqOutOfOrder, i + 1};
      return cert;
    }
  }
  cert.verdict = true;
  return cert;
}

Permutation reduce_unchecked(Permutation const& sigma) {
  int const n = sigma.size();
  if (n < 2) throw InvalidArgument("cannot reduce a permutation of size 1");
  std::vector<int> w(sigma.word().begin(), sigma.word().end() - 1);
  auto it = std::find(w.begin(), w.end(), n);
  if (it != w.end()) *it = sigma(n);
  return make_unchecked(std::move(w));
}

bool is_bp2_by_reduction(Permutation const& sigma) {
  std::vector<int> w(sigma.word().begin(), sigma.word().end());
  while (true) {
    if (!weak_exceedance_interval(w)) return false;
    if (w.size() == 1) return true;
    int const n = static_cast<int>(w.size());
    int const last = w.back();
    w.pop_back();
    if (last != n) *std::find(w.begin(), w.end(), n) = last;
  }
}

Permutation extend(Permutation const& parent, int i) {
  require_bp2(parent, "extend");
  int const m = parent.size();
  int const k = static_cast<int>(weak_exceedances(parent).size());
  if (i < 1 || i > k + 1)
    throw InvalidArgument("extend: i = " + std::to_string(i) + " outside [1, " +
                          std::to_string(k + 1) + "]");
  std::vector<int> w(parent.word().begin(), parent.word().end());
  if (i == m + 1) {
    w.push_back(m + 1);
  } else {
    int const moved = w[static_cast<std::size_t>(i - 1)];
    w[static_cast<std::size_t>(i - 1)] = m + 1;
    w.push_back(moved);
  }
  return make_unchecked(std::move(w));
}

std::pair<Permutation, int> reduce(Permutation const& sigma) {
  require_bp2(sigma, "reduce");
  if (sigma.size() < 2) throw InvalidArgument("reduce: permutation of size 1");
  int const i = sigma.inverse()(sigma.size());
  return {reduce_unchecked(sigma), i};
}

namespace {

struct Bp2Walker {
  int n;
  std::optional<int> target;
  std::function<void(Permutation const&)> const& visit;
  std::vector<int> word;

  // `k` weak exceedances at the current size.
  void descend(int k) {
    int const m = static_cast<int>(word.size());
    if (m == n) {
      visit(make_unchecked(word));
      return;
    }
    int const remaining = n - m;
    for (int i = 1; i <= k + 1; ++i) {
      int const child_k = i <= k ? k : k + 1;
      if (target && (child_k > *target || child_k + remaining - 1 < *target)) continue;
      if (i == m + 1) {
        word.push_back(m + 1);
        descend(child_k);
        word.pop_back();
      } else {
        auto& slot = word[static_cast<std::size_t>(i - 1)];
        int const moved = slot;
        slot = m + 1;
        word.push_back(moved);
        descend(child_k);
        word.pop_back();
        word[static_cast<std::size_t>(i - 1)] = moved;
      }
    }
  }
};

}  // namespace

void for_each_bp2(int n, std::optional<int> k,
                  std::function<void(Permutation const&)> const& visit) {
  if (n < 1) throw InvalidArgument("BP2 size " + std::to_string(n) + " < 1");
  if (k && (*k < 1 || *k > n))
    throw InvalidArgument("weak exceedance count " + std::to_string(*k) +
                          " outside [1, " + std::to_string(n) + "]");
  Bp2Walker walker{n, k, visit, {1}};
  walker.descend(1);
}

std::vector<Permutation> enumerate_bp2(int n, std::optional<int> k) {
  std::vector<Permutation> out;
  for_each_bp2(n, k, [&](Permutation const& s) { out.push_back(s); });
  return out;
}

BigInt count_bp2(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("negative argument to count_bp2");
  if (k > n)
    throw InvalidArgument("count_bp2(" + std::to_string(n) + ", " + std::to_string(k) +
                          "): k > n");
  // b[m][j]; b(0,0) = 1.
  std::vector<std::vector<BigInt>> b(static_cast<std::size_t>(n) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
  b[0][0] = 1;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
    for (std::size_t j = 1; j <= m; ++j)
      b[m][j] = static_cast<int>(j) * b[m - 1][j] + b[m - 1][j - 1];
  return b[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

long long count_singleton_class(int n, int k) {
  if (n < 2 || k <= 1 || k >= n)
    throw InvalidArgument("count_singleton_class needs n >= 2 and 1 < k < n, got n = " +
                          std::to_string(n) + ", k = " + std::to_string(k));
  long long count = 0;
  for_each_bp2(n, k, [&](Permutation const& s) {
    if (s(k) == n && s(n) < k) ++count;
  });
  return count;
}

}  // namespace bellperm
