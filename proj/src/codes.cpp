#include "bellperm/codes.hpp"

#include <algorithm>
#include <string>

#include "bellperm/errors.hpp"

namespace bellperm {

SubexceedantFunction::SubexceedantFunction(std::vector<int> word)
    : word_(std::move(word)) {
  if (word_.empty()) throw InvalidArgument("subexceedant function of size 0");
  for (int i = 1; i <= size(); ++i) {
    int const v = (*this)(i);
    if (v < 1 || v > i)
      throw InvalidArgument("value " + std::to_string(v) + " at position " +
                            std::to_string(i) + " violates 1 <= f_i <= i");
  }
}

SubexceedantFunction SubexceedantFunction::identity(int n) {
  if (n < 1) throw InvalidArgument("subexceedant function of size " + std::to_string(n));
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return SubexceedantFunction(std::move(w));
}

namespace {

// One-line word with its inverse, both 1-indexed (slot 0 unused).
struct Tableau {
  std::vector<int> word;
  std::vector<int> pos;

  explicit Tableau(int n)
      : word(static_cast<std::size_t>(n) + 1), pos(static_cast<std::size_t>(n) + 1) {
    for (int i = 0; i <= n; ++i) {
      word[static_cast<std::size_t>(i)] = i;
      pos[static_cast<std::size_t>(i)] = i;
    }
  }

  explicit Tableau(Permutation const& sigma) : Tableau(sigma.size()) {
    for (int i = 1; i <= sigma.size(); ++i) {
      word[static_cast<std::size_t>(i)] = sigma(i);
      pos[static_cast<std::size_t>(sigma(i))] = i;
    }
  }

  // sigma <- (a b) o sigma
  void swap_values(int a, int b) {
    auto& pa = pos[static_cast<std::size_t>(a)];
    auto& pb = pos[static_cast<std::size_t>(b)];
    word[static_cast<std::size_t>(pa)] = b;
    word[static_cast<std::size_t>(pb)] = a;
    std::swap(pa, pb);
  }

  // sigma <- sigma o (a b)
  void swap_positions(int a, int b) {
    auto& wa = word[static_cast<std::size_t>(a)];
    auto& wb = word[static_cast<std::size_t>(b)];
    std::swap(wa, wb);
    pos[static_cast<std::size_t>(wa)] = a;
    pos[static_cast<std::size_t>(wb)] = b;
  }

  Permutation to_permutation() && {
    word.erase(word.begin());
    return make_unchecked(std::move(word));
  }
};

}  // namespace

Permutation phi(SubexceedantFunction const& f) {
  // (1 f_1) acts first, so each later factor is composed on the left.
  Tableau t(f.size());
  for (int i = 1; i <= f.size(); ++i) t.swap_values(i, f(i));
  return std::move(t).to_permutation();
}

Permutation phi_tilde(SubexceedantFunction const& f) {
  // (n f_n) acts first: sigma = (1 f_1) o ... o (n f_n).
  Tableau t(f.size());
  for (int i = f.size(); i >= 1; --i) t.swap_values(i, f(i));
  return std::move(t).to_permutation();
}

SubexceedantFunction phi_inv(Permutation const& sigma) {
  // sigma = (m f_m) o sigma' with sigma' fixing m, hence f_m = sigma(m).
  Tableau t(sigma);
  std::vector<int> f(static_cast<std::size_t>(sigma.size()));
  for (int m = sigma.size(); m >= 1; --m) {
    int const fm = t.word[static_cast<std::size_t>(m)];
    f[static_cast<std::size_t>(m - 1)] = fm;
    t.swap_values(m, fm);
  }
  return SubexceedantFunction(std::move(f));
}

SubexceedantFunction phi_tilde_inv(Permutation const& sigma) {
  // sigma = sigma' o (m f_m) with sigma' fixing m, hence f_m = sigma^-1(m).
  Tableau t(sigma);
  std::vector<int> f(static_cast<std::size_t>(sigma.size()));
  for (int m = sigma.size(); m >= 1; --m) {
    int const fm = t.pos[static_cast<std::size_t>(m)];
    f[static_cast<std::size_t>(m - 1)] = fm;
    t.swap_positions(m, fm);
  }
  return SubexceedantFunction(std::move(f));
}

std::vector<int> image(SubexceedantFunction const& f) {
  std::vector<int> out(f.word().begin(), f.word().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ima(SubexceedantFunction const& f) { return static_cast<int>(image(f).size()); }

SubexceedantFunction nu(SubexceedantFunction const& f) {
  auto const values = image(f);
  std::vector<int> rank(static_cast<std::size_t>(f.size()) + 1, 0);
  for (std::size_t r = 0; r < values.size(); ++r)
    rank[static_cast<std::size_t>(values[r])] = static_cast<int>(r) + 1;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(f.size()));
  for (int v : f.word()) out.push_back(rank[static_cast<std::size_t>(v)]);
  return SubexceedantFunction(std::move(out));
}

SubexceedantFunction zeta(SubexceedantFunction const& f) {
  std::vector<int> leftmost(static_cast<std::size_t>(f.size()) + 1, 0);
  for (int j = 1; j <= f.size(); ++j) {
    auto& slot = leftmost[static_cast<std::size_t>(f(j))];
    if (slot == 0) slot = j;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(f.size()));
  for (int v : f.word()) out.push_back(leftmost[static_cast<std::size_t>(v)]);
  return SubexceedantFunction(std::move(out));
}

}  // namespace bellperm
