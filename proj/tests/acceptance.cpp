// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "bellperm/bijections.hpp"
#include "bellperm/bp2.hpp"
#include "bellperm/codes.hpp"
#include "bellperm/oracle.hpp"
#include "bellperm/partitions.hpp"

using namespace bellperm;
using V = std::vector<int>;
using VV = std::vector<std::vector<int>>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, std::string const& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, std::string const& name, double limit_s,
               std::function<void(Outcome&)> const& body) {
  Outcome out;
  auto const t0 = Clock::now();
  try {
    body(out);
  } catch (std::exception const& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  double const secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0) out.expect(secs < limit_s, "over time limit " + std::to_string(limit_s) + " s");
  failures += !out.ok;
  std::printf("%s %d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              out.ok ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

V as_vec(std::span<int const> s) { return {s.begin(), s.end()}; }

void golden(Outcome& o) {
  SubexceedantFunction const f{1, 2, 1, 1, 3, 2, 3, 4, 2};
  o.expect(phi(f) == Permutation{5, 6, 8, 1, 7, 9, 3, 4, 2}, "phi(121132342)");
  o.expect(phi_tilde(f) == Permutation{4, 9, 7, 8, 1, 2, 5, 3, 6}, "phi_tilde(121132342)");
  o.expect(as_vec(inom_table(Permutation{10, 6, 8, 5, 1, 4, 9, 3, 2, 7}).word()) ==
               V{1, 1, 3, 2, 4, 2, 1, 3, 7, 1},
           "inom table");

  o.expect(lambda_map(Permutation{4, 5, 2, 1, 3}) == SetPartition(VV{{1, 4}, {2, 3, 5}}),
           "lambda(45213)");
  o.expect(lambda_map(Permutation{3, 6, 8, 2, 1, 4, 5, 7}) ==
               SetPartition(VV{{1, 3}, {2, 4, 6}, {5, 7, 8}}),
           "lambda(36821457)");
  o.expect(chi_map(SetPartition(VV{{1, 4, 7}, {2, 9}, {3, 5, 10}, {6, 8}})) ==
               Permutation{7, 9, 10, 8, 3, 1, 4, 6, 2, 5},
           "chi");

  auto const s1 = mu_map(SetPartition(VV{{1, 2, 7, 9}, {3, 5, 6}, {4, 8}}));
  o.expect(s1 == from_cycles({{9, 7, 2, 1}, {6, 5, 3}, {8, 4}}), "mu");
  o.expect(beta_map(s1) == from_cycles({{9, 7, 2, 6, 5, 3, 8, 4, 1}}), "beta");
  auto const s2 = from_cycles({{1, 4, 9, 7, 3, 5, 8}, {2, 6}});
  o.expect(theta_map(s2) == from_cycles({{1, 4, 3}, {2, 6}, {5}, {9, 7}, {8}}), "theta");

  std::set<Permutation> const want{
      Permutation{4, 3, 2, 1}, Permutation{1, 4, 2, 3}, Permutation{4, 3, 1, 2},
      Permutation{2, 4, 1, 3}, Permutation{4, 2, 1, 3}, Permutation{3, 4, 1, 2},
      Permutation{3, 4, 2, 1}};
  auto const got = enumerate_bp2(4, 2);
  o.expect(std::set<Permutation>(got.begin(), got.end()) == want && got.size() == 7,
           "BP2(4,2)");
}

void bell_count(Outcome& o) {
  using Rec = std::function<bool(Permutation const&)>;
  Rec const recs[] = {
      [](Permutation const& s) { return is_bp2_by_code(s); },
      [](Permutation const& s) { return is_bp2_by_characterization(s).verdict; },
      [](Permutation const& s) { return is_bp2_by_reduction(s); },
  };
  char const* names[] = {"code", "characterization", "reduction"};
  for (int n = 1; n <= 8; ++n) {
    long long c[3] = {0, 0, 0};
    oracle::for_each_permutation(n, [&](Permutation const& s) {
      for (int r = 0; r < 3; ++r) c[r] += recs[r](s);
    });
    for (int r = 0; r < 3; ++r)
      o.expect(BigInt(c[r]) == bell(n),
               std::string(names[r]) + " count at n=" + std::to_string(n));
  }
  o.expect(bell(8) == 4140, "B(8)");
}

void stirling_distribution(Outcome& o) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<long long> filtered(n + 1, 0);
    oracle::for_each_permutation(n, [&](Permutation const& s) {
      if (is_bp2_by_code(s)) ++filtered[weak_exceedances(s).size()];
    });
    for (int k = 1; k <= n; ++k) {
      auto const tag = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.expect(BigInt(filtered[k]) == stirling(n, k), "filter" + tag);
      auto const gen = enumerate_bp2(n, k);
      std::set<Permutation> const distinct(gen.begin(), gen.end());
      o.expect(distinct.size() == gen.size(), "generator duplicates" + tag);
      o.expect(BigInt(gen.size()) == stirling(n, k), "generator" + tag);
      for (auto const& s : gen)
        o.expect(is_bp2_by_code(s) && int(weak_exceedances(s).size()) == k,
                 "generator emitted a stranger" + tag);
    }
  }
}

void round_trips(Outcome& o) {
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_subexceedant(n, [&](SubexceedantFunction const& f) {
      o.expect(phi_inv(phi(f)) == f, "phi_inv . phi");
      o.expect(phi_tilde_inv(phi_tilde(f)) == f, "phi_tilde_inv . phi_tilde");
    });
    oracle::for_each_permutation(n, [&](Permutation const& s) {
      o.expect(phi(phi_inv(s)) == s, "phi . phi_inv");
      o.expect(phi_tilde(phi_tilde_inv(s)) == s, "phi_tilde . phi_tilde_inv");
    });
  }
  for (int n = 1; n <= 8; ++n) {
    long long partitions = 0, bp1 = 0, bp2 = 0;
    oracle::for_each_partition(n, [&](SetPartition const& p) {
      ++partitions;
      o.expect(lambda_map(chi_map(p)) == p, "lambda . chi at n=" + std::to_string(n));
    });
    for_each_bp2(n, std::nullopt, [&](Permutation const& s) {
      ++bp2;
      o.expect(chi_map(lambda_map(s)) == s, "chi . lambda at n=" + std::to_string(n));
      o.expect(beta_map(theta_map(s)) == s, "beta . theta at n=" + std::to_string(n));
    });
    for_each_bp1(n, std::nullopt, [&](Permutation const& s) {
      ++bp1;
      o.expect(theta_map(beta_map(s)) == s, "theta . beta at n=" + std::to_string(n));
    });
    o.expect(BigInt(partitions) == bell(n) && BigInt(bp1) == bell(n) && BigInt(bp2) == bell(n),
             "class sizes at n=" + std::to_string(n));
  }
}

void inom_theorem(Outcome& o) {
  long long seen = 0;
  oracle::for_each_permutation(7, [&](Permutation const& s) {
    ++seen;
    o.expect(phi_tilde_inv(s) == inom_table(s), "phi_tilde_inv != inom_table");
  });
  o.expect(seen == 5040, "S7 size");
}

void diagram(Outcome& o) {
  for (int n = 1; n <= 7; ++n) {
    for_each_bp1(n, std::nullopt, [&](Permutation const& s1) {
      auto const c1 = phi_tilde_inv(s1);
      auto const c2 = phi_tilde_inv(beta_map(s1));
      o.expect(c2 == nu(c1), "code of beta is nu of code at n=" + std::to_string(n));
      o.expect(zeta(c2) == c1, "zeta recovers the BP1 code at n=" + std::to_string(n));
      o.expect(verify_diagram(s1).ok(), "verify_diagram at n=" + std::to_string(n));
    });
  }
}

void corollaries(Outcome& o) {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k < n; ++k) {
      long long brute = 0;
      for_each_bp2(n, k, [&](Permutation const& s) { brute += s(k) == n && s(n) < k; });
      auto const tag = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.expect(BigInt(brute) == stirling(n - 1, k - 1), "singleton class" + tag);
      o.expect(count_singleton_class(n, k) == brute, "count_singleton_class" + tag);
    }
  }
  for (int n = 2; n <= 10; ++n) {
    long long c = 0;
    for_each_bp2(n, n - 1, [&](Permutation const&) { ++c; });
    o.expect(c == n * (n - 1) / 2, "|BP2(n,n-1)| at n=" + std::to_string(n));
    o.expect(count_bp2(n, n - 1) == n * (n - 1) / 2, "count_bp2(n,n-1) at n=" + std::to_string(n));
  }
}

void rgf_generation(Outcome& o) {
  for (int n = 1; n <= 11; ++n) {
    long long c = 0;
    V prev;
    bool ordered = true;
    for_each_rgf(n, [&](std::span<int const> w) {
      ++c;
      V cur(w.begin(), w.end());
      if (!prev.empty() && !(prev < cur)) ordered = false;
      prev = std::move(cur);
    });
    o.expect(BigInt(c) == bell(n), "count at n=" + std::to_string(n));
    o.expect(ordered, "strict lex order at n=" + std::to_string(n));
  }
  // n = 12: compare consecutive words in place so the timing measures the generator.
  long long c = 0;
  bool ordered = true;
  V prev;
  auto const t0 = Clock::now();
  for_each_rgf(12, [&](std::span<int const> w) {
    if (c++ && !std::lexicographical_compare(prev.begin(), prev.end(), w.begin(), w.end()))
      ordered = false;
    prev.assign(w.begin(), w.end());
  });
  double const secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.expect(c == 4213597, "B(12) words");
  o.expect(bell(12) == 4213597, "bell(12)");
  o.expect(ordered, "strict lex order at n=12");
  double const rate = c / std::max(secs, 1e-9);
  o.expect(rate >= 1e6, "throughput " + std::to_string(rate) + " words/s");
  std::printf("     n=12: %lld words, %.0f words/s\n", c, rate);
}

void recognizer_equivalence(Outcome& o) {
  long long disagree = 0;
  oracle::for_each_permutation(8, [&](Permutation const& s) {
    bool const a = is_bp2_by_code(s);
    disagree += a != is_bp2_by_characterization(s).verdict || a != is_bp2_by_reduction(s);
  });
  o.expect(disagree == 0, std::to_string(disagree) + " disagreements on S8");
}

}  // namespace

int main() {
  criterion(1, "golden examples", 1.0, golden);
  criterion(2, "Bell count by three recognizers, n <= 8", 10.0, bell_count);
  criterion(3, "Stirling distribution by filter and generator, n <= 8", 0, stirling_distribution);
  criterion(4, "code and bijection round-trips", 60.0, round_trips);
  criterion(5, "inom code equals inom table on S7", 0, inom_theorem);
  criterion(6, "diagram commutes on BP1, n <= 7", 0, diagram);
  criterion(7, "singleton class and (n, n-1) counts", 0, corollaries);
  criterion(8, "RGF generation, n <= 12", 10.0, rgf_generation);
  criterion(9, "recognizer equivalence on S8", 0, recognizer_equivalence);
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
