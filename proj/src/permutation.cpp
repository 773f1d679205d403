#include "bellperm/permutation.hpp"

#include <algorithm>
#include <string>

#include "bellperm/codes.hpp"
#include "bellperm/errors.hpp"

namespace bellperm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  int const n = size();
  if (n == 0) throw InvalidArgument("permutation of size 0");
  std::vector<bool> seen(word_.size() + 1, false);
  for (int i = 1; i <= n; ++i) {
    int const v = (*this)(i);
    if (v < 1 || v > n)
      throw InvalidArgument("value " + std::to_string(v) + " at position " +
                            std::to_string(i) + " is outside [1, " +
                            std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("value " + std::to_string(v) + " repeated at position " +
                            std::to_string(i));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation make_unchecked(std::vector<int> word) {
  return Permutation(std::move(word), Permutation::Unchecked{});
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("permutation of size " + std::to_string(n));
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return make_unchecked(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return make_unchecked(std::move(inv));
}

CycleDecomposition cycle_decomposition(Permutation const& sigma) {
  int const n = sigma.size();
  CycleDecomposition cd;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  // Scanning starts in increasing order, so every cycle starts at its
  // minimum and cycles come out sorted by minima.
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = sigma(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    cd.cycles.push_back(std::move(cycle));
  }
  return cd;
}

Permutation from_cycles(std::vector<std::vector<int>> const& cycles, int n) {
  int largest = 0;
  for (auto const& c : cycles) {
    if (c.empty()) throw InvalidArgument("empty cycle");
    for (int x : c) {
      if (x < 1) throw InvalidArgument("cycle element " + std::to_string(x) + " < 1");
      largest = std::max(largest, x);
    }
  }
  if (n == 0) n = largest;
  if (n < 1) throw InvalidArgument("permutation of size 0");
  if (largest > n)
    throw InvalidArgument("cycle element " + std::to_string(largest) +
                          " exceeds n = " + std::to_string(n));
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (auto const& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto& slot = w[static_cast<std::size_t>(c[j] - 1)];
      if (slot != 0)
        throw InvalidArgument("element " + std::to_string(c[j]) +
                              " appears in more than one cycle position");
      slot = c[(j + 1) % c.size()];
    }
  }
  for (int i = 1; i <= n; ++i)
    if (w[static_cast<std::size_t>(i - 1)] == 0) w[static_cast<std::size_t>(i - 1)] = i;
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> max_first(CycleDecomposition const& cd) {
  auto out = cd.cycles;
  for (auto& c : out) std::rotate(c.begin(), std::max_element(c.begin(), c.end()), c.end());
  return out;
}

std::vector<int> weak_exceedances(Permutation const& sigma) {
  std::vector<int> out;
  for (int i = 1; i <= sigma.size(); ++i)
    if (sigma(i) >= i) out.push_back(i);
  return out;
}

std::vector<int> weak_exceedance_letters(Permutation const& sigma) {
  std::vector<int> out;
  for (int i = 1; i <= sigma.size(); ++i)
    if (sigma(i) >= i) out.push_back(sigma(i));
  return out;
}

namespace {

int inom_with_inverse(Permutation const& inv, int x) {
  int y = inv(x);
  while (y > x) y = inv(y);
  return y;
}

}  // namespace

int inom(Permutation const& sigma, int x) {
  if (x < 1 || x > sigma.size())
    throw InvalidArgument("inom argument " + std::to_string(x) + " outside [1, " +
                          std::to_string(sigma.size()) + "]");
  return inom_with_inverse(sigma.inverse(), x);
}

SubexceedantFunction inom_table(Permutation const& sigma) {
  auto const inv = sigma.inverse();
  std::vector<int> f(static_cast<std::size_t>(sigma.size()));
  for (int x = 1; x <= sigma.size(); ++x)
    f[static_cast<std::size_t>(x - 1)] = inom_with_inverse(inv, x);
  return SubexceedantFunction(std::move(f));
}

std::vector<int> seq(Permutation const& sigma) {
  auto const f = inom_table(sigma);
  std::vector<bool> seen(static_cast<std::size_t>(sigma.size()) + 1, false);
  std::vector<int> out;
  for (int x = 1; x <= f.size(); ++x) {
    auto const v = static_cast<std::size_t>(f(x));
    if (!seen[v]) {
      seen[v] = true;
      out.push_back(x);
    }
  }
  return out;
}

WeakExcProfile weak_exc_profile(Permutation const& sigma) {
  return {weak_exceedances(sigma), weak_exceedance_letters(sigma), seq(sigma)};
}

}  // namespace bellperm
