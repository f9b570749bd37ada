#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cantorsum/cantor_struct.hpp"
#include "cantorsum/generator.hpp"
#include "oracles.hpp"

using namespace cantorsum;

TEST_CASE("prefix constructions match the four families") {
  PrefixSpec p3(PrefixFamily::kP3, 9);
  CHECK(construct_generators(p3) == std::vector<uint64_t>{1, 2, 4, 9});
  CHECK(prefix_realized(p3, construct_generators(p3)));

  PrefixSpec p4a(PrefixFamily::kP4, 12, 10);
  CHECK(construct_generators(p4a) == std::vector<uint64_t>{1, 2, 3, 4, 12});
  CHECK(prefix_realized(p4a, construct_generators(p4a)));

  PrefixSpec p4b(PrefixFamily::kP4, 14, 12);
  CHECK(construct_generators(p4b) == std::vector<uint64_t>{1, 2, 3, 6, 14});
  CHECK(prefix_realized(p4b, construct_generators(p4b)));

  CHECK(construct_generators(PrefixSpec(PrefixFamily::kP1, 3)) ==
        std::vector<uint64_t>{1, 3});
  CHECK(construct_generators(PrefixSpec(PrefixFamily::kP2, 5)) ==
        std::vector<uint64_t>{1, 2, 5});
}

TEST_CASE("the r = 14 corner needs the capped-doubling fallback") {
  PrefixSpec spec(PrefixFamily::kP4, 16, 14);
  auto B = construct_generators(spec);
  CHECK(B == std::vector<uint64_t>{1, 2, 4, 7, 16});
  CHECK(prefix_realized(spec, B));
  // The naive assignment {1,2,3,8,k} leaves 7 uncovered.
  CHECK(!prefix_realized(spec, {1, 2, 3, 8, 16}));
}

TEST_CASE("prefix sweeps realize their patterns exactly") {
  for (uint64_t k = 3; k <= 50; ++k)
    CHECK(prefix_realized(PrefixSpec(PrefixFamily::kP1, k),
                          construct_generators(PrefixSpec(PrefixFamily::kP1, k))));
  for (uint64_t k = 5; k <= 50; ++k)
    CHECK(prefix_realized(PrefixSpec(PrefixFamily::kP2, k),
                          construct_generators(PrefixSpec(PrefixFamily::kP2, k))));
  for (uint64_t k = 9; k <= 50; ++k)
    CHECK(prefix_realized(PrefixSpec(PrefixFamily::kP3, k),
                          construct_generators(PrefixSpec(PrefixFamily::kP3, k))));
  for (uint64_t r = 10; r <= 30; ++r) {
    PrefixSpec spec(PrefixFamily::kP4, r + 2, r);
    CHECK(prefix_realized(spec, construct_generators(spec)));
  }
}

TEST_CASE("prefix parameter validation") {
  CHECK_THROWS_AS(PrefixSpec(PrefixFamily::kP1, 2), std::invalid_argument);
  CHECK_THROWS_AS(PrefixSpec(PrefixFamily::kP2, 4), std::invalid_argument);
  CHECK_THROWS_AS(PrefixSpec(PrefixFamily::kP3, 8), std::invalid_argument);
  CHECK_THROWS_AS(PrefixSpec(PrefixFamily::kP4, 12, 9), std::invalid_argument);
  CHECK_THROWS_AS(PrefixSpec(PrefixFamily::kP4, 11, 10), std::invalid_argument);
}

TEST_CASE("interval margin condition flips at n = 4") {
  CHECK(!check_prefix_condition(1));
  CHECK(!check_prefix_condition(2));
  CHECK(!check_prefix_condition(3));
  CHECK(check_prefix_condition(4));
  for (uint64_t n = 5; n <= 100; ++n) CHECK(check_prefix_condition(n));
  CHECK_THROWS_AS(check_prefix_condition(0), std::invalid_argument);
}

TEST_CASE("super-increasing predicate") {
  CHECK(superincreasing({1, 3, 9}).pass);
  auto bad = superincreasing({1, 2, 3});
  CHECK(!bad.pass);
  CHECK(bad.first_violation == 3);  // 3 = 1 + 2
  CHECK(!superincreasing({2, 5}).pass);  // must start at 1
  CHECK(superincreasing({1, 3, 7, 15}).pass);  // boundary: each = sum + ...

  // Generator sequences floor(p^n alpha) stay super-increasing.
  const std::pair<int, int> alphas[] = {{3, 2},  {5, 3},  {7, 4},  {13, 8},
                                        {27, 16}, {9, 5},  {11, 6}, {17, 16},
                                        {31, 16}, {15, 8}};
  for (auto [num, den] : alphas) {
    for (int64_t p : {2, 3, 5}) {
      auto t = build_table(
          DigitStream::rational(RationalAlpha(num, den), Radix(p)), 30);
      std::vector<uint64_t> B;
      mpz_class sum = 0;
      bool direct = true;
      for (const auto& x : t.x) {
        direct = direct && (x > sum);
        sum += x;
      }
      auto small = t.terms_upto(UINT64_MAX);
      CHECK(superincreasing(small).pass == direct);
      CHECK(superincreasing(small).pass);
    }
  }
}

TEST_CASE("converse check on classic generator sets") {
  CHECK(verify_converse({1, 3, 9, 27}, 40).pass);
  CHECK(verify_converse({1, 3, 7, 15}, 26).pass);
  CHECK(verify_converse({1}, 10).pass);
  CHECK_THROWS_AS(verify_converse({1, 2, 3}, 10), std::invalid_argument);
}

TEST_CASE("constructed prefixes extend to shift-invariant sets") {
  // Append a doubling continuation (next = 2*sum + 1) past k, so every
  // shifted gap image stays clear of later copies, and check at N = 4k.
  auto extend_and_check = [](PrefixSpec spec) {
    auto B = construct_generators(spec);
    uint64_t sum = 0;
    for (uint64_t b : B) sum += b;
    uint64_t N = 4 * spec.k;
    while (2 * sum + 1 <= N) {
      B.push_back(2 * sum + 1);
      sum += B.back();
    }
    auto check = cantor_type_check(B, N);
    CHECK(check.shift_invariance.pass);
    CHECK(check.decomposition_ok);
  };
  extend_and_check(PrefixSpec(PrefixFamily::kP1, 5));
  extend_and_check(PrefixSpec(PrefixFamily::kP2, 7));
  extend_and_check(PrefixSpec(PrefixFamily::kP3, 11));
  extend_and_check(PrefixSpec(PrefixFamily::kP4, 13, 11));
  extend_and_check(PrefixSpec(PrefixFamily::kP4, 16, 14));
}

TEST_CASE("greedy recovery returns the generators") {
  IntSetBitmap A(13);
  for (uint64_t v : {0, 1, 3, 4, 9, 10, 12, 13}) A.set(v);
  auto r = recover_generators(A);
  CHECK(r.generators == std::vector<uint64_t>{1, 3, 9});
  CHECK(r.validated);
  CHECK(r.resolvable_bound == 13);

  IntSetBitmap tiny(1);
  tiny.set(0);
  tiny.set(1);
  auto rt = recover_generators(tiny);
  CHECK(rt.generators == std::vector<uint64_t>{1});
  CHECK(rt.validated);
}

TEST_CASE("recovery certifies non-representable truncations") {
  IntSetBitmap A(4);
  for (uint64_t v : {0, 1, 2, 4}) A.set(v);
  auto r = recover_generators(A);
  CHECK(!r.validated);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(*r.first_mismatch == 3);  // FS({1,2}) contains 3, A does not

  IntSetBitmap no_one(4);
  no_one.set(0);
  no_one.set(2);
  CHECK_THROWS_AS(recover_generators(no_one), std::invalid_argument);
}

TEST_CASE("round trip on seeded super-increasing sets") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<uint64_t> B{1};
    uint64_t sum = 1;
    size_t len = 2 + rng() % 23;
    for (size_t i = 1; i < len && sum < 800000; ++i) {
      uint64_t next = sum + 1 + rng() % (sum + 1);
      B.push_back(next);
      sum += next;
    }
    REQUIRE(superincreasing(B).pass);
    auto r = recover_generators(fs_bitmap(B, sum));
    CHECK(r.validated);
    CHECK(r.generators == B);
  }
}

TEST_CASE("truncated sets recover the visible generators") {
  // Cut inside the top copy: the greedy result still matches on [0, N].
  std::vector<uint64_t> B{1, 3, 9, 27};
  for (uint64_t N : {27, 30, 35, 39}) {
    auto r = recover_generators(fs_bitmap(B, N));
    CHECK(r.validated);
    CHECK(r.generators == B);
  }
}
