#include "bellperm/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bellperm/bijections.hpp"
#include "bellperm/bp2.hpp"
#include "bellperm/errors.hpp"
#include "bellperm/text.hpp"

namespace bellperm::oracle {

namespace {

void guard(int n, int limit, bool allow_large, char const* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + ": n = " + std::to_string(n) + " < 1");
  if (n > limit && !allow_large)
    throw InvalidArgument(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds the desk-scale limit " + std::to_string(limit) +
                          " (override with allow_large)");
}

void insert_element(int x, int n, std::vector<std::vector<int>>& blocks,
                    std::function<void(SetPartition const&)> const& visit) {
  if (x > n) {
    visit(SetPartition(blocks));
    return;
  }
  // Index, not reference: the recursion may grow and reallocate blocks.
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(x);
    insert_element(x + 1, n, blocks, visit);
    blocks[b].pop_back();
  }
  blocks.push_back({x});
  insert_element(x + 1, n, blocks, visit);
  blocks.pop_back();
}

}  // namespace

void for_each_permutation(int n, std::function<void(Permutation const&)> const& visit,
                          bool allow_large) {
  guard(n, kMaxScanN, allow_large, "all_permutations");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_subexceedant(int n,
                           std::function<void(SubexceedantFunction const&)> const& visit,
                           bool allow_large) {
  guard(n, kMaxScanN, allow_large, "all_subexceedant");
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(SubexceedantFunction(w));
    // Odometer: position i (1-based) runs over 1..i.
    int i = n;
    while (i >= 1 && w[static_cast<std::size_t>(i - 1)] == i) {
      w[static_cast<std::size_t>(i - 1)] = 1;
      --i;
    }
    if (i < 1) return;
    ++w[static_cast<std::size_t>(i - 1)];
  }
}

void for_each_partition(int n, std::function<void(SetPartition const&)> const& visit,
                        bool allow_large) {
  guard(n, kMaxPartitionN, allow_large, "all_partitions");
  std::vector<std::vector<int>> blocks;
  insert_element(1, n, blocks, visit);
}

std::vector<Permutation> all_permutations(int n, bool allow_large) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](Permutation const& s) { out.push_back(s); }, allow_large);
  return out;
}

std::vector<SubexceedantFunction> all_subexceedant(int n, bool allow_large) {
  std::vector<SubexceedantFunction> out;
  for_each_subexceedant(n, [&](SubexceedantFunction const& f) { out.push_back(f); },
                        allow_large);
  return out;
}

std::vector<SetPartition> all_partitions(int n, bool allow_large) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](SetPartition const& p) { out.push_back(p); }, allow_large);
  return out;
}

namespace {

using text::format_partition;
using text::format_permutation;
using text::format_sef;

enum class Scan { Permutations, Partitions };

struct Ctx {
  DiscrepancyReport& report;
  CheckOptions const& options;

  bool recognizer(Permutation const& s) const {
    return options.hooks.bp2_recognizer ? options.hooks.bp2_recognizer(s)
                                        : is_bp2_by_code(s);
  }

  void tested(std::size_t count = 1) { report.tested += count; }

  void fail(std::string input, std::string expected, std::string actual) {
    ++report.discrepancies;
    if (report.counterexamples.size() < options.cap)
      report.counterexamples.push_back(
          {std::move(input), std::move(expected), std::move(actual)});
  }

  template <class T>
  void expect_eq(std::string const& input, T const& expected, T const& actual,
                 std::string (*show)(T const&)) {
    if (!(expected == actual)) fail(input, show(expected), show(actual));
  }

  void expect_count(std::string const& input, BigInt const& expected, BigInt const& actual) {
    if (expected != actual) fail(input, expected.str(), actual.str());
  }

  void perms(int n, std::function<void(Permutation const&)> const& fn) {
    for_each_permutation(n, fn, options.allow_large);
  }
};

std::string show_bool(bool const& b) { return b ? "true" : "false"; }
std::string show_word(std::vector<int> const& w) { return "<" + text::format_word(w) + ">"; }
std::string show_perm(Permutation const& p) { return format_permutation(p); }
std::string show_sef(SubexceedantFunction const& f) { return format_sef(f); }
std::string show_partition(SetPartition const& p) { return format_partition(p); }

std::vector<int> k_range(int n, std::optional<int> k) {
  if (k) {
    if (*k < 1 || *k > n)
      throw InvalidArgument("k = " + std::to_string(*k) + " outside [1, " +
                            std::to_string(n) + "]");
    return {*k};
  }
  std::vector<int> ks(static_cast<std::size_t>(n));
  std::iota(ks.begin(), ks.end(), 1);
  return ks;
}

void check_phi_roundtrip(int n, std::optional<int>, Ctx& c) {
  std::set<Permutation> outputs;
  std::size_t codes = 0;
  for_each_subexceedant(n, [&](SubexceedantFunction const& f) {
    c.tested();
    ++codes;
    auto const s = phi(f);
    outputs.insert(s);
    c.expect_eq(format_sef(f), f, phi_inv(s), show_sef);
  }, c.options.allow_large);
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    c.expect_eq(format_permutation(s), s, phi(phi_inv(s)), show_perm);
  });
  c.expect_count("distinct phi images", BigInt(codes), BigInt(outputs.size()));
}

void check_phi_tilde_roundtrip(int n, std::optional<int>, Ctx& c) {
  std::set<Permutation> outputs;
  std::size_t codes = 0;
  for_each_subexceedant(n, [&](SubexceedantFunction const& f) {
    c.tested();
    ++codes;
    auto const s = phi_tilde(f);
    outputs.insert(s);
    c.expect_eq(format_sef(f), f, phi_tilde_inv(s), show_sef);
  }, c.options.allow_large);
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    c.expect_eq(format_permutation(s), s, phi_tilde(phi_tilde_inv(s)), show_perm);
  });
  c.expect_count("distinct phi_tilde images", BigInt(codes), BigInt(outputs.size()));
}

void check_inom_theorem(int n, std::optional<int>, Ctx& c) {
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    c.expect_eq(format_permutation(s), inom_table(s), phi_tilde_inv(s), show_sef);
  });
}

std::vector<int> anti_exceedance_letters(Permutation const& s) {
  std::vector<int> out;
  for (int i = 1; i <= s.size(); ++i)
    if (s(i) <= i) out.push_back(s(i));
  std::sort(out.begin(), out.end());
  return out;
}

void check_code_image(int n, std::optional<int>, Ctx& c) {
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    auto const in = format_permutation(s);
    c.expect_eq(in + " [inom code image]", weak_exceedances(s), image(phi_tilde_inv(s)),
                show_word);
    c.expect_eq(in + " [phi code image]", anti_exceedance_letters(s), image(phi_inv(s)),
                show_word);
  });
}

void check_seq_cardinality(int n, std::optional<int>, Ctx& c) {
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    auto const in = format_permutation(s);
    auto const f = phi_tilde_inv(s);
    auto const wexc = weak_exceedances(s);
    auto const sq = seq(s);
    c.expect_eq(in + " [|Seq| = |w-Exc|]", wexc.size(), sq.size(),
                +[](std::size_t const& v) { return std::to_string(v); });
    // Seq holds leftmost occurrences of code values; w-Exc holds the values
    // themselves, each with a rightmost occurrence.
    std::vector<int> leftmost;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x = 1; x <= n; ++x)
      if (!seen[static_cast<std::size_t>(f(x))]) {
        seen[static_cast<std::size_t>(f(x))] = true;
        leftmost.push_back(x);
      }
    c.expect_eq(in + " [Seq = leftmost occurrences]", leftmost, sq, show_word);
    std::vector<int> with_rightmost;
    for (int i = 1; i <= n; ++i)
      if (seen[static_cast<std::size_t>(i)]) with_rightmost.push_back(i);
    c.expect_eq(in + " [w-Exc = values of the code]", wexc, with_rightmost, show_word);
  });
}

void check_recognizer_agreement(int n, std::optional<int>, Ctx& c) {
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    bool const by_code = c.recognizer(s);
    bool const by_char = is_bp2_by_characterization(s).verdict;
    bool const by_red = is_bp2_by_reduction(s);
    auto const in = format_permutation(s);
    c.expect_eq(in + " [characterization]", by_code, by_char, show_bool);
    c.expect_eq(in + " [reduction]", by_code, by_red, show_bool);
  });
}

void check_bell_count(int n, std::optional<int>, Ctx& c) {
  std::size_t by_code = 0, by_char = 0, by_red = 0;
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    by_code += c.recognizer(s);
    by_char += is_bp2_by_characterization(s).verdict;
    by_red += is_bp2_by_reduction(s);
  });
  c.expect_count("count by code", bell(n), BigInt(by_code));
  c.expect_count("count by characterization", bell(n), BigInt(by_char));
  c.expect_count("count by reduction", bell(n), BigInt(by_red));
}

void check_stirling_distribution(int n, std::optional<int> k, Ctx& c) {
  auto const ks = k_range(n, k);
  std::map<int, std::vector<Permutation>> filtered;
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    if (c.recognizer(s)) filtered[static_cast<int>(weak_exceedances(s).size())].push_back(s);
  });
  for (int kk : ks) {
    auto const label = "k=" + std::to_string(kk);
    auto const expected = stirling(n, kk);
    auto& filt = filtered[kk];
    c.expect_count(label + " [filter]", expected, BigInt(filt.size()));
    auto gen = enumerate_bp2(n, kk);
    c.expect_count(label + " [generator]", expected, BigInt(gen.size()));
    std::sort(gen.begin(), gen.end());
    auto const distinct = static_cast<std::size_t>(
        std::unique(gen.begin(), gen.end()) - gen.begin());
    c.expect_count(label + " [generator distinct]", BigInt(gen.size()), BigInt(distinct));
    std::sort(filt.begin(), filt.end());
    if (!std::equal(gen.begin(), gen.end(), filt.begin(), filt.end()))
      c.fail(label + " [generator set]", "filtered set", "different set");
  }
}

void check_count_recurrence(int n, std::optional<int> k, Ctx& c) {
  std::vector<int> ks = k ? k_range(n, k) : std::vector<int>{};
  if (!k)
    for (int kk = 0; kk <= n; ++kk) ks.push_back(kk);
  for (int kk : ks) {
    c.tested();
    c.expect_count("b(" + std::to_string(n) + "," + std::to_string(kk) + ")",
                   stirling(n, kk), count_bp2(n, kk));
  }
  BigInt next = 0;
  for (int i = 0; i <= n; ++i) next += binomial(n, i) * bell(i);
  c.expect_count("B(n+1) = sum C(n,i) B(i)", bell(n + 1), next);
}

void check_rgf_equivalence(int n, std::optional<int>, Ctx& c) {
  for_each_subexceedant(n, [&](SubexceedantFunction const& f) {
    c.tested();
    c.expect_eq(format_sef(f), is_rgf(f), is_rgf_by_prefix_intervals(f), show_bool);
  }, c.options.allow_large);
}

void check_partition_enumeration(int n, std::optional<int> k, Ctx& c) {
  std::vector<SetPartition> baseline;
  for_each_partition(n, [&](SetPartition const& p) {
    c.tested();
    if (!k || p.block_count() == *k) baseline.push_back(p);
    for (int b = 1; b <= p.block_count(); ++b)
      for (int x : p.block(b))
        if (b > x) c.fail(format_partition(p), "element in one of the first i blocks",
                          std::to_string(x) + " in block " + std::to_string(b));
  }, c.options.allow_large);
  auto generated = enumerate_partitions(n, k);
  c.expect_count("count", k ? stirling(n, *k) : bell(n), BigInt(generated.size()));
  for (auto const& p : generated) {
    auto const back = from_canonical(canonical_form(p));
    c.expect_eq(format_partition(p), p, back, show_partition);
  }
  std::sort(baseline.begin(), baseline.end());
  std::sort(generated.begin(), generated.end());
  if (baseline != generated) c.fail("partition sets", "oracle set", "RGF-generated set");
}

void check_lambda_chi(int n, std::optional<int>, Ctx& c) {
  for_each_partition(n, [&](SetPartition const& p) {
    c.tested();
    auto const s = chi_map(p);
    c.expect_eq(format_partition(p), p, lambda_map(s), show_partition);
  }, c.options.allow_large);
  c.perms(n, [&](Permutation const& s) {
    if (!is_bp2_by_code(s)) return;
    c.tested();
    auto const in = format_permutation(s);
    auto const pi = lambda_map(s);
    c.expect_eq(in + " [chi o lambda]", s, chi_map(pi), show_perm);
    c.expect_eq(in + " [direct vs code route]", lambda_map_via_code(s), pi, show_partition);
    for (int i = 1; i <= pi.block_count(); ++i)
      if (pi.block(i).back() != s(i))
        c.fail(in + " [max of block " + std::to_string(i) + "]", std::to_string(s(i)),
               std::to_string(pi.block(i).back()));
  });
}

void check_mu_injectivity(int n, std::optional<int>, Ctx& c) {
  std::set<Permutation> images;
  for_each_partition(n, [&](SetPartition const& p) {
    c.tested();
    auto const s = mu_map(p);
    images.insert(s);
    auto const in = format_partition(p);
    c.expect_eq(in + " [is_bp1]", true, is_bp1(s), show_bool);
    c.expect_count(in + " [cycles = blocks]", BigInt(p.block_count()),
                   BigInt(cycle_decomposition(s).count()));
    auto const s2 = beta_map(s);
    c.expect_count(in + " [w-Exc of beta]", BigInt(p.block_count()),
                   BigInt(weak_exceedances(s2).size()));
    c.expect_count(in + " [blocks of lambda o beta]", BigInt(p.block_count()),
                   BigInt(lambda_map(s2).block_count()));
  }, c.options.allow_large);
  c.expect_count("distinct mu images", bell(n), BigInt(images.size()));
}

void check_beta_theta(int n, std::optional<int>, Ctx& c) {
  std::set<Permutation> beta_images;
  std::size_t bp2_total = 0;
  c.perms(n, [&](Permutation const& s) {
    auto const in = format_permutation(s);
    if (is_bp1(s)) {
      c.tested();
      auto const s2 = beta_map(s);
      beta_images.insert(s2);
      c.expect_eq(in + " [beta lands in BP2]", true, is_bp2_by_code(s2), show_bool);
      c.expect_eq(in + " [theta o beta]", s, theta_map(s2), show_perm);
    }
    if (is_bp2_by_code(s)) {
      c.tested();
      ++bp2_total;
      auto const s1 = theta_map(s);
      c.expect_eq(in + " [theta lands in BP1]", true, is_bp1(s1), show_bool);
      c.expect_eq(in + " [beta o theta]", s, beta_map(s1), show_perm);
    }
  });
  c.expect_count("|beta(BP1)|", bell(n), BigInt(beta_images.size()));
  c.expect_count("|BP2|", bell(n), BigInt(bp2_total));
}

void check_diagram(int n, std::optional<int>, Ctx& c) {
  std::size_t bp1_total = 0;
  c.perms(n, [&](Permutation const& s) {
    if (!is_bp1(s)) return;
    c.tested();
    ++bp1_total;
    auto const r = verify_diagram(s);
    auto const in = format_permutation(s);
    c.expect_eq(in + " [code of beta = nu(code)]", true, r.code_normalizes, show_bool);
    c.expect_eq(in + " [zeta recovers code]", true, r.zeta_recovers, show_bool);
    c.expect_eq(in + " [partition of cycles]", true, r.partition_matches, show_bool);
    c.expect_eq(in + " [cycles = w-Exc]", true, r.block_count_preserved, show_bool);
    auto const code = phi_tilde_inv(s);
    c.expect_eq(in + " [zeta o nu]", code, zeta(nu(code)), show_sef);
    c.expect_eq(in + " [nu(code) is RGF]", true, is_rgf(nu(code)), show_bool);
  });
  c.expect_count("|BP1|", bell(n), BigInt(bp1_total));
}

void check_extend_reduce(int n, std::optional<int>, Ctx& c) {
  if (n < 2) return;
  c.perms(n - 1, [&](Permutation const& parent) {
    if (!is_bp2_by_code(parent)) return;
    int const k = static_cast<int>(weak_exceedances(parent).size());
    for (int i = 1; i <= k + 1; ++i) {
      c.tested();
      auto const child = extend(parent, i);
      auto const in = format_permutation(parent) + " i=" + std::to_string(i);
      c.expect_eq(in + " [child is BP2]", true, is_bp2_by_code(child), show_bool);
      auto const [back, j] = reduce(child);
      c.expect_eq(in + " [reduce parent]", parent, back, show_perm);
      if (j != i) c.fail(in + " [reduce index]", std::to_string(i), std::to_string(j));
      auto const parent_code = phi_tilde_inv(parent);
      std::vector<int> expected(parent_code.word().begin(), parent_code.word().end());
      expected.push_back(i);
      c.expect_eq(in + " [code gains i]", SubexceedantFunction(expected),
                  phi_tilde_inv(child), show_sef);
    }
  });
}

void check_singleton_class(int n, std::optional<int> k, Ctx& c) {
  if (n < 3) return;
  std::vector<int> ks;
  if (k) {
    if (*k <= 1 || *k >= n) throw InvalidArgument("singleton-class needs 1 < k < n");
    ks = {*k};
  } else {
    for (int kk = 2; kk < n; ++kk) ks.push_back(kk);
  }
  std::map<int, long long> filtered;
  c.perms(n, [&](Permutation const& s) {
    c.tested();
    if (!is_bp2_by_code(s)) return;
    int const kk = static_cast<int>(weak_exceedances(s).size());
    if (kk > 1 && kk < n && s(kk) == n && s(n) < kk) ++filtered[kk];
  });
  for (int kk : ks) {
    auto const label = "k=" + std::to_string(kk);
    c.expect_count(label + " [generator]", stirling(n - 1, kk - 1),
                   BigInt(count_singleton_class(n, kk)));
    c.expect_count(label + " [filter]", stirling(n - 1, kk - 1), BigInt(filtered[kk]));
  }
}

void check_near_identity_count(int n, std::optional<int>, Ctx& c) {
  if (n < 2) return;
  BigInt const expected = BigInt(n) * (n - 1) / 2;
  auto gen = enumerate_bp2(n, n - 1);
  c.tested(gen.size());
  c.expect_count("|BP2(n,n-1)| [generator]", expected, BigInt(gen.size()));
  std::sort(gen.begin(), gen.end());
  c.expect_count("distinct", BigInt(gen.size()),
                 BigInt(std::unique(gen.begin(), gen.end()) - gen.begin()));
  std::size_t via_chi = 0;
  for_each_partition(n, [&](SetPartition const& p) {
    if (p.block_count() != n - 1) return;
    c.tested();
    ++via_chi;
    auto const s = chi_map(p);
    auto const cert = is_bp2_by_characterization(s);
    if (!cert.verdict || cert.k != n - 1)
      c.fail(format_partition(p), "BP2 with n-1 weak exceedances", format_permutation(s));
  }, c.options.allow_large);
  c.expect_count("|P(n,n-1)| via chi", expected, BigInt(via_chi));
}

struct Entry {
  void (*run)(int, std::optional<int>, Ctx&);
  Scan scan;
};

std::map<std::string, Entry, std::less<>> const& registry() {
  static std::map<std::string, Entry, std::less<>> const r{
      {"phi-roundtrip", {check_phi_roundtrip, Scan::Permutations}},
      {"phi-tilde-roundtrip", {check_phi_tilde_roundtrip, Scan::Permutations}},
      {"inom-theorem", {check_inom_theorem, Scan::Permutations}},
      {"code-image", {check_code_image, Scan::Permutations}},
      {"seq-cardinality", {check_seq_cardinality, Scan::Permutations}},
      {"recognizer-agreement", {check_recognizer_agreement, Scan::Permutations}},
      {"bell-count", {check_bell_count, Scan::Permutations}},
      {"stirling-distribution", {check_stirling_distribution, Scan::Permutations}},
      {"count-recurrence", {check_count_recurrence, Scan::Partitions}},
      {"rgf-equivalence", {check_rgf_equivalence, Scan::Permutations}},
      {"partition-enumeration", {check_partition_enumeration, Scan::Partitions}},
      {"lambda-chi-roundtrip", {check_lambda_chi, Scan::Permutations}},
      {"mu-injectivity", {check_mu_injectivity, Scan::Partitions}},
      {"beta-theta-roundtrip", {check_beta_theta, Scan::Permutations}},
      {"diagram", {check_diagram, Scan::Permutations}},
      {"extend-reduce", {check_extend_reduce, Scan::Permutations}},
      {"singleton-class", {check_singleton_class, Scan::Permutations}},
      {"near-identity-count", {check_near_identity_count, Scan::Partitions}},
  };
  return r;
}

}  // namespace

std::vector<std::string> const& check_names() {
  static std::vector<std::string> const names = [] {
    std::vector<std::string> out;
    for (auto const& [name, entry] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

DiscrepancyReport run_check(std::string_view name, int n, std::optional<int> k,
                            CheckOptions const& options) {
  auto const it = registry().find(name);
  if (it == registry().end())
    throw InvalidArgument("unknown check '" + std::string(name) + "'");
  auto const& entry = it->second;
  guard(n, entry.scan == Scan::Permutations ? kMaxScanN : kMaxPartitionN,
        options.allow_large, it->first.c_str());
  DiscrepancyReport report;
  report.check = it->first;
  report.n = n;
  report.k = k;
  Ctx ctx{report, options};
  entry.run(n, k, ctx);
  return report;
}

std::vector<DiscrepancyReport> run_suite(int n_max, std::vector<std::string> const& names,
                                         CheckOptions const& options) {
  auto const& selected = names.empty() ? check_names() : names;
  for (auto const& name : selected)
    if (!registry().contains(name)) throw InvalidArgument("unknown check '" + name + "'");
  std::vector<DiscrepancyReport> out;
  for (auto const& name : selected)
    for (int n = 1; n <= n_max; ++n) out.push_back(run_check(name, n, std::nullopt, options));
  return out;
}

std::string format_text(DiscrepancyReport const& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.check << " n=" << r.n;
  if (r.k) os << " k=" << *r.k;
  os << " tested=" << r.tested;
  if (!r.passed()) os << " discrepancies=" << r.discrepancies;
  for (auto const& ce : r.counterexamples)
    os << "\n  " << ce.input << ": expected " << ce.expected << ", got " << ce.actual;
  return os.str();
}

std::string format_json(DiscrepancyReport const& r) {
  nlohmann::json counterexamples = nlohmann::json::array();
  for (auto const& ce : r.counterexamples)
    counterexamples.push_back(
        {{"input", ce.input}, {"expected", ce.expected}, {"actual", ce.actual}});
  nlohmann::json payload{{"check", r.check},
                         {"passed", r.passed()},
                         {"tested", r.tested},
                         {"discrepancies", r.discrepancies},
                         {"counterexamples", counterexamples}};
  if (r.k) payload["k"] = *r.k;
  nlohmann::json record{{"kind", "report"}, {"n", r.n}, {"payload", payload}};
  return record.dump();
}

}  // namespace bellperm::oracle
