#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cantorsum/digit_stream.hpp"

using namespace cantorsum;

TEST_CASE("rational expansion matches long division") {
  CHECK(expand_rational(RationalAlpha(3, 2), Radix(2), 4) ==
        Digits{1, 1, 0, 0, 0});
  CHECK(expand_rational(RationalAlpha(5, 3), Radix(2), 5) ==
        Digits{1, 1, 0, 1, 0, 1});
  CHECK(expand_rational(RationalAlpha(3, 2), Radix(3), 3) ==
        Digits{1, 1, 1, 1});
}

TEST_CASE("alpha domain is the open interval (1,2)") {
  CHECK_THROWS_AS(RationalAlpha(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(RationalAlpha(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(RationalAlpha(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(RationalAlpha(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(RationalAlpha(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Radix(1), std::invalid_argument);
  CHECK_THROWS_AS(Radix(-3), std::invalid_argument);
  // 6/4 reduces to 3/2
  CHECK(RationalAlpha(6, 4) == RationalAlpha(3, 2));
}

TEST_CASE("rational parse") {
  CHECK(RationalAlpha::parse("13/8").num == 13);
  CHECK_THROWS_AS(RationalAlpha::parse("13"), std::invalid_argument);
  CHECK_THROWS_AS(RationalAlpha::parse("a/b"), std::invalid_argument);
}

TEST_CASE("reconstruction: digit prefix approximates alpha to p^-n") {
  const int64_t ps[] = {2, 3, 5, 10};
  const std::pair<int, int> alphas[] = {{3, 2},  {5, 3},   {7, 4},  {13, 8},
                                        {27, 16}, {17, 16}, {11, 6}, {9, 5}};
  const size_t n = 200;
  for (int64_t p : ps) {
    for (auto [num, den] : alphas) {
      RationalAlpha a(num, den);
      Digits d = expand_rational(a, Radix(p), n);
      REQUIRE(d.size() == n + 1);
      REQUIRE(d[0] == 1);
      mpq_class value = 0;
      mpq_class scale = 1;
      for (size_t i = 0; i <= n; ++i) {
        CHECK(d[i] < static_cast<uint32_t>(p));
        value += mpq_class(d[i]) * scale;
        scale /= p;
      }
      mpq_class err = a.value() - value;
      CHECK(err >= 0);
      CHECK(err < scale * p);  // scale*p = p^-n after the loop
    }
  }
}

TEST_CASE("streams are pure functions of their parameters") {
  DigitStream r = DigitStream::rational(RationalAlpha(5, 3), Radix(2));
  CHECK(r.digits(50) == r.digits(50));
  DigitStream s = DigitStream::seeded(99, Radix(7));
  CHECK(s.digits(1000) == s.digits(1000));
  CHECK(DigitStream::seeded(99, Radix(7)).digits(1000) == s.digits(1000));
  CHECK(DigitStream::seeded(100, Radix(7)).digits(1000) != s.digits(1000));
}

TEST_CASE("random stream basics") {
  CHECK(random_stream(12345, Radix(2), 0) == Digits{1});
  Digits d = random_stream(7, Radix(7), 5000);
  REQUIRE(d.size() == 5001);
  CHECK(d[0] == 1);
  for (uint32_t v : d) CHECK(v < 7);
}

TEST_CASE("seeded digits are near-equidistributed at 10^6") {
  const int64_t p = 5;
  Digits d = random_stream(42, Radix(p), 1000000);
  std::vector<uint64_t> freq(p, 0);
  for (size_t i = 1; i < d.size(); ++i) ++freq[d[i]];
  for (int64_t v = 0; v < p; ++v) {
    double rel = static_cast<double>(freq[v]) * p / 1e6;
    CHECK(rel > 0.995);
    CHECK(rel < 1.005);
  }
}

TEST_CASE("digit prefix sums") {
  CHECK(digit_prefix_sums({1, 1, 0, 0}) == std::vector<int64_t>{1, 2, 2, 2});
  CHECK(digit_prefix_sums({1, 1, 0, 1}) == std::vector<int64_t>{1, 2, 2, 3});
  CHECK(digit_prefix_sums({1}) == std::vector<int64_t>{1});
  CHECK(digit_prefix_sums({}).empty());
}

TEST_CASE("source description strings") {
  CHECK(DigitStream::rational(RationalAlpha(5, 3), Radix(2)).source_str() ==
        "5/3");
  CHECK(DigitStream::seeded(42, Radix(3)).source_str() == "seed:42");
}
