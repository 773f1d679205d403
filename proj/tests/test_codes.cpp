#include "doctest.h"

#include <set>

#include "bellperm/bijections.hpp"
#include "bellperm/codes.hpp"
#include "bellperm/errors.hpp"
#include "bellperm/oracle.hpp"
#include "bellperm/partitions.hpp"
#include "brute.hpp"

using namespace bellperm;
using V = std::vector<int>;

namespace {

V as_vec(std::span<int const> s) { return {s.begin(), s.end()}; }
SubexceedantFunction const kF{1, 2, 1, 1, 3, 2, 3, 4, 2};

}  // namespace

TEST_CASE("subexceedant constructor reports bad positions") {
  CHECK_THROWS_AS(SubexceedantFunction(V{}), InvalidArgument);
  CHECK_THROWS_AS(SubexceedantFunction({2}), InvalidArgument);
  CHECK_THROWS_AS(SubexceedantFunction({1, 3}), InvalidArgument);
  CHECK_THROWS_AS(SubexceedantFunction({1, 0}), InvalidArgument);
  try {
    SubexceedantFunction({1, 2, 4});
    FAIL("expected throw");
  } catch (InvalidArgument const& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("phi golden values") {
  CHECK(phi(kF) == Permutation{5, 6, 8, 1, 7, 9, 3, 4, 2});
  CHECK(phi(SubexceedantFunction::identity(6)) == Permutation::identity(6));
  CHECK(phi(SubexceedantFunction{1, 1}) == Permutation{2, 1});
}

TEST_CASE("phi_tilde golden values") {
  CHECK(phi_tilde(kF) == Permutation{4, 9, 7, 8, 1, 2, 5, 3, 6});
  CHECK(phi_tilde(SubexceedantFunction::identity(6)) == Permutation::identity(6));
  CHECK(phi_tilde(SubexceedantFunction{1, 1}) == Permutation{2, 1});
}

TEST_CASE("inverses on the worked examples") {
  CHECK(phi_tilde_inv(Permutation{4, 9, 7, 8, 1, 2, 5, 3, 6}) == kF);
  CHECK(phi_tilde_inv(Permutation::identity(5)) == SubexceedantFunction::identity(5));
  CHECK(phi_tilde_inv(Permutation{2, 1}) == SubexceedantFunction{1, 1});
  CHECK(phi_inv(Permutation{5, 6, 8, 1, 7, 9, 3, 4, 2}) == kF);
  CHECK(phi_inv(Permutation::identity(5)) == SubexceedantFunction::identity(5));
  CHECK(phi_inv(Permutation{2, 1}) == SubexceedantFunction{1, 1});
}

TEST_CASE("image and ima") {
  CHECK(image(kF) == V{1, 2, 3, 4});
  CHECK(ima(kF) == 4);
  CHECK(image(SubexceedantFunction{1, 1, 1, 1}) == V{1});
  CHECK(ima(SubexceedantFunction{1, 1, 1, 1}) == 1);
  CHECK(image(SubexceedantFunction{1, 1, 3}) == V{1, 3});
  CHECK(ima(SubexceedantFunction{1, 1, 3}) == 2);
}

TEST_CASE("nu ranks values") {
  CHECK(as_vec(nu(SubexceedantFunction{1, 1, 3, 1, 3, 3, 4, 4, 7, 1}).word()) ==
        V{1, 1, 2, 1, 2, 2, 3, 3, 4, 1});
  CHECK(nu(kF) == kF);
  CHECK(as_vec(nu(SubexceedantFunction{1, 1, 3}).word()) == V{1, 1, 2});
}

TEST_CASE("zeta replaces values by leftmost positions") {
  CHECK(as_vec(zeta(SubexceedantFunction{1, 1, 2, 1, 2, 2, 3, 3, 4, 1}).word()) ==
        V{1, 1, 3, 1, 3, 3, 7, 7, 9, 1});
  CHECK(zeta(SubexceedantFunction::identity(7)) == SubexceedantFunction::identity(7));
  CHECK(as_vec(zeta(SubexceedantFunction{1, 1, 2}).word()) == V{1, 1, 3});
}

TEST_CASE("codes agree with the literal transposition products, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    std::set<Permutation> images, tilde_images;
    std::size_t total = 0;
    oracle::for_each_subexceedant(n, [&](SubexceedantFunction const& f) {
      ++total;
      auto const w = as_vec(f.word());
      auto const s = phi(f);
      auto const t = phi_tilde(f);
      REQUIRE(as_vec(s.word()) == brute::phi(w));
      REQUIRE(as_vec(t.word()) == brute::phi_tilde(w));
      REQUIRE(phi_inv(s) == f);
      REQUIRE(phi_tilde_inv(t) == f);
      images.insert(s);
      tilde_images.insert(t);
    });
    CHECK(images.size() == total);
    CHECK(tilde_images.size() == total);
  }
}

TEST_CASE("inom code theorem and image correspondences, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    oracle::for_each_permutation(n, [&](Permutation const& s) {
      auto const code = phi_tilde_inv(s);
      REQUIRE(code == inom_table(s));
      REQUIRE(image(code) == weak_exceedances(s));
      V anti;
      for (int i = 1; i <= n; ++i)
        if (s(i) <= i) anti.push_back(s(i));
      std::sort(anti.begin(), anti.end());
      REQUIRE(image(phi_inv(s)) == anti);
    });
  }
}

TEST_CASE("nu and zeta on codes of BP1 permutations, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    for (auto const& pi : oracle::all_partitions(n)) {
      auto const code = phi_tilde_inv(mu_map(pi));
      REQUIRE(zeta(nu(code)) == code);
      REQUIRE(is_rgf(nu(code)));
    }
  }
}
