#include "bellperm/bijections.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bellperm/bp2.hpp"
#include "bellperm/codes.hpp"
#include "bellperm/errors.hpp"

namespace bellperm {

namespace {

void require_bp2(Permutation const& sigma, char const* op) {
  if (!is_bp2_by_code(sigma))
    throw NotBp2(std::string(op) + ": permutation is not a Bell permutation of the second kind");
}

// 1-indexed mutable one-line word; slot 0 unused.
std::vector<int> padded_word(Permutation const& sigma) {
  std::vector<int> w{0};
  w.insert(w.end(), sigma.word().begin(), sigma.word().end());
  return w;
}

Permutation unpad(std::vector<int> w) {
  w.erase(w.begin());
  return make_unchecked(std::move(w));
}

}  // namespace

SetPartition lambda_map(Permutation const& sigma) {
  require_bp2(sigma, "lambda");
  int const n = sigma.size();
  int const k = static_cast<int>(weak_exceedances(sigma).size());
  auto const inv = sigma.inverse();

  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
  std::vector<bool> is_letter(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= k; ++i) {
    blocks[static_cast<std::size_t>(i - 1)].push_back(sigma(i));
    is_letter[static_cast<std::size_t>(sigma(i))] = true;
  }
  for (int j = n; j >= 1; --j) {
    if (is_letter[static_cast<std::size_t>(j)]) continue;
    int r = inv(j);
    while (r > j) r = inv(r);
    auto& block = blocks[static_cast<std::size_t>(r - 1)];
    block.insert(block.begin(), j);
  }
  return SetPartition(std::move(blocks));
}

SetPartition lambda_map_via_code(Permutation const& sigma) {
  require_bp2(sigma, "lambda");
  return from_canonical(phi_tilde_inv(sigma));
}

Permutation chi_map(SetPartition const& pi) {
  int const n = pi.size();
  std::vector<int> sigma(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> is_max(static_cast<std::size_t>(n) + 1, false);
  for (int b = 1; b <= pi.block_count(); ++b) {
    auto const block = pi.block(b);
    for (int x : block) block_of[static_cast<std::size_t>(x)] = b;
    sigma[static_cast<std::size_t>(b)] = block.back();
    is_max[static_cast<std::size_t>(block.back())] = true;
  }
  for (int j = n; j >= 1; --j) {
    if (is_max[static_cast<std::size_t>(j)]) continue;
    // First point on the orbit sigma(r), sigma^2(r), ... still lacking an image.
    int p = sigma[static_cast<std::size_t>(block_of[static_cast<std::size_t>(j)])];
    for (int steps = 0; sigma[static_cast<std::size_t>(p)] != 0; ++steps) {
      if (steps > n) throw Error("chi: orbit walk did not terminate");
      p = sigma[static_cast<std::size_t>(p)];
    }
    sigma[static_cast<std::size_t>(p)] = j;
  }
  return unpad(std::move(sigma));
}

Permutation mu_map(SetPartition const& pi) {
  std::vector<int> w(static_cast<std::size_t>(pi.size()) + 1, 0);
  for (auto const& block : pi.blocks()) {
    // Decreasing cycle (b_p ... b_2 b_1): b_j -> b_{j-1}, b_1 -> b_p.
    w[static_cast<std::size_t>(block.front())] = block.back();
    for (std::size_t j = 1; j < block.size(); ++j)
      w[static_cast<std::size_t>(block[j])] = block[j - 1];
  }
  return unpad(std::move(w));
}

bool is_bp1(Permutation const& sigma) {
  for (auto const& c : max_first(cycle_decomposition(sigma)))
    if (!std::is_sorted(c.begin(), c.end(), std::greater<>())) return false;
  return true;
}

Permutation beta_map(Permutation const& sigma1) {
  if (!is_bp1(sigma1))
    throw NotBp1("beta: permutation is not a Bell permutation of the first kind");
  auto const cd = cycle_decomposition(sigma1);
  int const k = static_cast<int>(cd.count());
  auto w = padded_word(sigma1);
  for (int i = k; i >= 2; --i) {
    auto const& cycle = cd.cycles[static_cast<std::size_t>(i - 1)];
    if (cycle.front() == i) continue;  // i lies in C_i
    // C_i read from its original maximum; its current last element is the
    // predecessor of that maximum.
    int const top = *std::max_element(cycle.begin(), cycle.end());
    int last = top;
    while (w[static_cast<std::size_t>(last)] != top) last = w[static_cast<std::size_t>(last)];
    w[static_cast<std::size_t>(last)] = w[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(i)] = top;
  }
  return unpad(std::move(w));
}

Permutation theta_map(Permutation const& sigma2) {
  require_bp2(sigma2, "theta");
  int const n = sigma2.size();
  int const k = static_cast<int>(weak_exceedances(sigma2).size());
  // Cycles are read as written: original ones from their minimum, extracted
  // ones from their first element. A run never wraps past that start.
  std::vector<int> start(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> original_min(static_cast<std::size_t>(n) + 1, false);
  for (auto const& c : cycle_decomposition(sigma2).cycles) {
    original_min[static_cast<std::size_t>(c.front())] = true;
    for (int x : c) start[static_cast<std::size_t>(x)] = c.front();
  }

  auto w = padded_word(sigma2);
  auto const at = [&](int x) -> int& { return w[static_cast<std::size_t>(x)]; };
  for (int i = 2; i <= k; ++i) {
    if (original_min[static_cast<std::size_t>(i)]) continue;
    int const first = at(i);
    int const head = start[static_cast<std::size_t>(i)];
    if (first <= i || first == head) continue;
    // Longest run after i of elements greater than i; it becomes a cycle.
    int last = first;
    while (at(last) > i && at(last) != head) last = at(last);
    at(i) = at(last);
    at(last) = first;
    for (int x = first;; x = at(x)) {
      start[static_cast<std::size_t>(x)] = first;
      if (x == last) break;
    }
  }
  return unpad(std::move(w));
}

void for_each_bp1(int n, std::optional<int> k,
                  std::function<void(Permutation const&)> const& visit) {
  for_each_partition(n, k, [&](SetPartition const& pi) { visit(mu_map(pi)); });
}

DiagramReport verify_diagram(Permutation const& sigma1) {
  if (!is_bp1(sigma1))
    throw NotBp1("diagram: permutation is not a Bell permutation of the first kind");
  auto const sigma2 = beta_map(sigma1);
  auto const code1 = phi_tilde_inv(sigma1);
  auto const code2 = phi_tilde_inv(sigma2);
  auto const cd = cycle_decomposition(sigma1);

  DiagramReport report;
  report.code_normalizes = code2 == nu(code1);
  report.zeta_recovers = zeta(code2) == code1;
  try {
    report.partition_matches =
        from_canonical(nu(code1)) == SetPartition::normalized(cd.cycles);
  } catch (NotAnRgf const&) {
    report.partition_matches = false;
  }
  report.block_count_preserved = cd.count() == weak_exceedances(sigma2).size();
  return report;
}

}  // namespace bellperm
