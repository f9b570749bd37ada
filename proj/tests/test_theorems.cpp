#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cantorsum/theorems.hpp"
#include "oracles.hpp"

using namespace cantorsum;

namespace {

GeneratorTable table_for(int num, int den, int64_t p, size_t n) {
  return build_table(
      DigitStream::rational(RationalAlpha(num, den), Radix(p)), n);
}

}  // namespace

TEST_CASE("y sequence on the all-ones digit table") {
  // alpha = 3/2, p = 3: x = [1,4,13,40], s_3 = 58, every digit 1.
  GeneratorTable t = table_for(3, 2, 3, 3);
  YSequence ys = y_sequence(t, 3);
  CHECK(ys.y(1) == 56);
  CHECK(ys.y(2) == 55);
  CHECK(ys.y(3) == 54);
  CHECK(ys.kept == std::vector<size_t>{1, 2, 3});
  CHECK(ys.m() == 3);
  CHECK(ys.kept_offsets_ascending() == std::vector<int64_t>{0, 1, 2});
}

TEST_CASE("y sequence drops zero-digit indices") {
  // alpha = 3/2, p = 2: digits 1,1,0,0; s_3 = 22; deltas 1,2,2,2.
  // Every y_k = s_3 - delta_k = 20; only k = 1 carries a nonzero digit.
  GeneratorTable t = table_for(3, 2, 2, 3);
  YSequence ys = y_sequence(t, 3);
  CHECK(ys.y(1) == 20);
  CHECK(ys.y(2) == 20);
  CHECK(ys.y(3) == 20);
  CHECK(ys.kept == std::vector<size_t>{1});
  CHECK(ys.m() == 1);
}

TEST_CASE("empty kept subsequence when the first digit is zero") {
  // alpha = 9/8 = 1.001 in base 2: eta_1 = 0.
  GeneratorTable t = table_for(9, 8, 2, 1);
  YSequence ys = y_sequence(t, 1);
  CHECK(ys.m() == 0);
}

TEST_CASE("every y value decomposes into the scaled sumset") {
  // Hand check: alpha = 3/2, p = 3, k = 1: y_1 = 56 = 54 + 2*1, with
  // 54 = 1+13+40 and 1 both subset sums.
  GeneratorTable t = table_for(3, 2, 3, 3);
  CHECK(t.s[3] - t.x[1] == 54);
  CHECK(t.subset_sum({0, 2, 3}) == 54);
  IntSetBitmap A = fs_bitmap(t.terms_upto(200), 200);
  CHECK(A.test(54));
  CHECK(A.test(1));
  IntSetBitmap S2 = scaled_sumset(A, 2, 200);
  CHECK(S2.test(56));

  auto rep = verify_y_membership(t, 3, 200);
  CHECK(rep.pass);
  CHECK(rep.checked == 3);

  auto rep2 = verify_y_membership(table_for(3, 2, 2, 2), 2, 50);
  CHECK(rep2.pass);

  auto vac = verify_y_membership(table_for(3, 2, 2, 3), 0, 50);
  CHECK(vac.pass);
  CHECK(vac.checked == 0);

  CHECK_THROWS_WITH_AS(verify_y_membership(t, 3, 10), "bound too small",
                       std::invalid_argument);
}

TEST_CASE("y membership across sources and bases") {
  for (uint64_t seed : {3u, 5u, 8u}) {
    auto t3 = build_table(DigitStream::seeded(seed, Radix(3)), 12);
    CHECK(verify_y_membership(t3, 12, 2000000).pass);
    auto t5 = build_table(DigitStream::seeded(seed, Radix(5)), 8);
    CHECK(verify_y_membership(t5, 8, 1000000).pass);
  }
}

TEST_CASE("pipeline on the all-ones table finds the full run") {
  auto rep = ap_content_pipeline(
      DigitStream::rational(RationalAlpha(3, 2), Radix(3)), 100,
      TermPolicy::kMaterialize, VdwTable::builtin());
  CHECK(rep.m == 100);
  CHECK(rep.ratio == doctest::Approx(1.0));
  CHECK(rep.K == 1);  // observed steps are all 1
  CHECK(rep.has_ap);
  CHECK(rep.extraction.ap.length == 100);
  CHECK(rep.extraction.ap.diff == 1);
  REQUIRE(rep.ap_start_absolute.has_value());
  // Smallest kept y = s_100 - delta_100 and the AP starts there.
  GeneratorTable t = table_for(3, 2, 3, 100);
  CHECK(*rep.ap_start_absolute == t.s[100] - t.delta[100]);
}

TEST_CASE("pipeline in base 2 yields a consecutive run of length m") {
  auto rep = ap_content_pipeline(
      DigitStream::rational(RationalAlpha(5, 3), Radix(2)), 200,
      TermPolicy::kMaterialize, VdwTable::builtin());
  CHECK(rep.K == 1);
  CHECK(rep.has_ap);
  CHECK(rep.extraction.ap.length == rep.m);
  CHECK(rep.extraction.ap.diff == 1);
}

TEST_CASE("pipeline ratio approaches (p-1)/p on seeded streams") {
  for (int64_t p : {3, 5}) {
    auto rep = ap_content_pipeline(DigitStream::seeded(2718, Radix(p)), 20000,
                                   TermPolicy::kDeltasOnly,
                                   VdwTable::builtin());
    CHECK(rep.ratio ==
          doctest::Approx(rep.predicted).epsilon(0.05));
    CHECK(rep.has_ap);
    CHECK(rep.extraction.ap.length >= rep.extraction.target_length);
  }
}

TEST_CASE("doubling cover at desk scale") {
  auto r = verify_sumset_cover(
      DigitStream::rational(RationalAlpha(3, 2), Radix(2)), 4, 92);
  CHECK(r.pass);
  CHECK(r.s_n == 46);

  auto r2 = verify_sumset_cover(
      DigitStream::rational(RationalAlpha(5, 3), Radix(2)), 12, {});
  CHECK(r2.pass);

  auto base = verify_sumset_cover(
      DigitStream::rational(RationalAlpha(3, 2), Radix(2)), 1, {});
  CHECK(base.pass);

  CHECK_THROWS_AS(verify_sumset_cover(
                      DigitStream::rational(RationalAlpha(3, 2), Radix(3)), 4,
                      {}),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      verify_sumset_cover(DigitStream::rational(RationalAlpha(3, 2), Radix(2)),
                          4, 10),
      "bound too small", std::invalid_argument);
}

TEST_CASE("witness decomposition follows the gap-filling construction") {
  GeneratorTable t = table_for(3, 2, 2, 3);
  SumWitness w = witness_decompose(11, t);
  CHECK(w.u == 10);
  CHECK(w.v == 1);
  CHECK(w.left == std::vector<size_t>{0, 1, 2});
  CHECK(w.right == std::vector<size_t>{0});

  SumWitness zero = witness_decompose(0, t);
  CHECK(zero.left.empty());
  CHECK(zero.right.empty());

  // Members of FS(B) get a one-sided greedy witness.
  SumWitness member = witness_decompose(13, t);
  CHECK(member.right.empty());
  CHECK(member.left == std::vector<size_t>{0, 3});

  CHECK_THROWS_WITH_AS(witness_decompose(23, t), "no witness at this depth",
                       std::invalid_argument);
}

TEST_CASE("doubling cover and witnesses across twenty rationals") {
  const std::pair<int, int> alphas[] = {
      {3, 2},   {5, 3},   {7, 4},   {13, 8},  {27, 16}, {31, 16}, {8, 5},
      {9, 5},   {11, 8},  {17, 16}, {33, 32}, {7, 6},   {11, 6},  {13, 7},
      {15, 8},  {19, 16}, {23, 16}, {29, 16}, {4, 3},   {9, 8}};
  std::mt19937_64 rng(606);
  for (auto [num, den] : alphas) {
    auto stream = DigitStream::rational(RationalAlpha(num, den), Radix(2));
    size_t n = 1;
    while (n < 25) {
      GeneratorTable probe = build_table(stream, n + 1);
      if (probe.s[n + 1] > 1000000) break;
      ++n;
    }
    auto cover = verify_sumset_cover(stream, n, {});
    CHECK(cover.pass);

    GeneratorTable t = build_table(stream, n);
    uint64_t sn = t.s[n].get_ui();
    IntSetBitmap A = fs_bitmap(t.terms_upto(sn), sn);
    for (uint64_t x = 0; x <= std::min<uint64_t>(sn, 1200); ++x) {
      SumWitness w = witness_decompose(x, t);
      REQUIRE(w.u + w.v == x);
      REQUIRE(A.test(w.u.get_ui()));
      REQUIRE(A.test(w.v.get_ui()));
    }
    for (int i = 0; i < 300; ++i) {
      uint64_t x = rng() % (sn + 1);
      SumWitness w = witness_decompose(x, t);
      REQUIRE(w.u + w.v == x);
      REQUIRE(A.test(w.u.get_ui()));
      REQUIRE(A.test(w.v.get_ui()));
    }
  }
}

TEST_CASE("doubling cover with a bound past s_n") {
  auto stream = DigitStream::rational(RationalAlpha(5, 3), Radix(2));
  GeneratorTable t = build_table(stream, 12);
  uint64_t sn = t.s[12].get_ui();
  auto r = verify_sumset_cover(stream, 12, 2 * sn);
  CHECK(r.pass);
  CHECK(r.bound == 2 * sn);
}

TEST_CASE("witness sweep: every target below s_n validates") {
  for (auto [num, den] : {std::pair<int, int>{3, 2}, {5, 3}, {27, 16}}) {
    GeneratorTable t = table_for(num, den, 2, 11);
    uint64_t sn = t.s[11].get_ui();
    IntSetBitmap A = fs_bitmap(t.terms_upto(sn), sn);
    uint64_t limit = std::min<uint64_t>(sn, 3000);
    for (uint64_t x = 0; x <= limit; ++x) {
      SumWitness w = witness_decompose(x, t);
      CHECK(w.u + w.v == x);
      CHECK(A.test(w.u.get_ui()));
      CHECK(A.test(w.v.get_ui()));
    }
  }
}

TEST_CASE("density report") {
  auto stream = DigitStream::rational(RationalAlpha(3, 2), Radix(2));
  auto rep = density_report(stream, {}, 22);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[2].scale == 22);
  CHECK(rep.rows[2].base == mpq_class(16, 23));
  REQUIRE(rep.predicted_base.has_value());
  CHECK(*rep.predicted_base == mpq_class(2, 3));

  auto rep2 = density_report(
      DigitStream::rational(RationalAlpha(5, 3), Radix(2)), {}, 100000);
  double got = rep2.rows[2].base.get_d();
  CHECK(got == doctest::Approx(0.6).epsilon(0.01));

  // Scaled sumsets in base 5 thin out as the bound grows.
  auto rep5 = density_report(
      DigitStream::rational(RationalAlpha(3, 2), Radix(5)), 4, 100000);
  REQUIRE(rep5.rows[0].sum.has_value());
  CHECK(rep5.rows[0].sum->get_d() > rep5.rows[2].sum->get_d());
}

TEST_CASE("seeded density stays near 1/alpha in base 2") {
  // Seeded streams model a generic alpha; density tracks 1/alpha where
  // alpha is reconstructed from the digits.
  auto stream = DigitStream::seeded(123, Radix(2));
  auto rep = density_report(stream, {}, 200000);
  Digits d = stream.digits(40);
  double alpha = 0, scale = 1;
  for (uint32_t v : d) {
    alpha += v * scale;
    scale /= 2;
  }
  CHECK(rep.rows[2].base.get_d() == doctest::Approx(1.0 / alpha).epsilon(0.02));
}
