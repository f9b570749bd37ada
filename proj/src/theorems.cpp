#include "cantorsum/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantorsum {

std::vector<int64_t> YSequence::kept_offsets_ascending() const {
  std::vector<int64_t> z;
  z.reserve(kept.size());
  if (kept.empty()) return z;
  int64_t top = delta[kept.back()];
  for (size_t i = kept.size(); i-- > 0;) z.push_back(top - delta[kept[i]]);
  return z;
}

YSequence y_sequence(const GeneratorTable& table, size_t n) {
  if (n > table.n) throw std::out_of_range("depth beyond table");
  YSequence ys;
  ys.n = n;
  ys.p = table.p;
  ys.delta.assign(table.delta.begin(), table.delta.begin() + n + 1);
  if (table.materialized()) ys.s_n = table.s[n];
  for (size_t k = 1; k <= n; ++k)
    if (table.digits[k] != 0) ys.kept.push_back(k);
  return ys;
}

YMembershipReport verify_y_membership(const GeneratorTable& table, size_t n,
                                      uint64_t N) {
  if (!table.materialized())
    throw std::logic_error("membership check requires a materialized table");
  if (n > table.n) throw std::out_of_range("depth beyond table");
  if (table.s[n] > N) throw std::invalid_argument("bound too small");

  std::vector<uint64_t> terms;
  for (size_t k = 0; k <= n; ++k) terms.push_back(table.x[k].get_ui());
  IntSetBitmap A = fs_bitmap(terms, N);
  IntSetBitmap S2 = scaled_sumset(A, static_cast<uint64_t>(table.p - 1), N);

  YMembershipReport rep;
  rep.per_k.assign(n, 1);
  for (size_t k = 1; k <= n; ++k) {
    mpz_class y = table.s[n] - table.delta[k];
    mpz_class w = table.s[n] - table.x[k];
    mpz_class recomposed = w + (table.p - 1) * table.s[k - 1];
    bool ok = recomposed == y;
    ok = ok && S2.test(y.get_ui());
    ok = ok && A.test(w.get_ui());
    ok = ok && A.test(table.s[k - 1].get_ui());
    ++rep.checked;
    if (!ok) {
      rep.per_k[k - 1] = 0;
      rep.pass = false;
      if (rep.first_fail < 0) rep.first_fail = static_cast<ptrdiff_t>(k);
    }
  }
  return rep;
}

APContentReport ap_content_pipeline(const DigitStream& stream, size_t n,
                                    TermPolicy policy, const VdwTable& table,
                                    bool certified_only) {
  if (n < 1) throw std::invalid_argument("pipeline needs depth >= 1");
  GeneratorTable gt = build_table(stream, n, policy);
  YSequence ys = y_sequence(gt, n);

  APContentReport rep;
  rep.p = gt.p;
  rep.n = n;
  rep.m = ys.m();
  rep.ratio = static_cast<double>(rep.m) / static_cast<double>(n);
  rep.predicted = static_cast<double>(gt.p - 1) / static_cast<double>(gt.p);
  rep.K = 1;
  rep.anchor_delta = ys.anchor_delta();
  if (rep.m == 0) return rep;

  std::vector<int64_t> z = ys.kept_offsets_ascending();
  // Kept steps are the nonzero digits, so they must land in [1, p-1];
  // anything else is an implementation bug, not a statistical miss. The
  // extraction runs with the observed bound, which can only shorten blocks
  // and lengthen the guaranteed progression.
  int64_t max_step = 1;
  for (size_t i = 1; i < z.size(); ++i) {
    int64_t step = z[i] - z[i - 1];
    if (step < 1 || step > gt.p - 1)
      throw std::logic_error("kept-subsequence step escaped [1, p-1]");
    max_step = std::max(max_step, step);
  }
  rep.K = static_cast<uint32_t>(max_step);
  rep.extraction = bounded_gap_ap_extract(z, rep.K, table, certified_only);
  rep.has_ap = true;
  if (ys.s_n)
    rep.ap_start_absolute = *ys.s_n - rep.anchor_delta + rep.extraction.ap.start;
  return rep;
}

SumsetCoverReport verify_sumset_cover(const DigitStream& stream, size_t n,
                                      std::optional<uint64_t> bound) {
  if (stream.p() != 2)
    throw std::invalid_argument("doubling cover check requires base 2");
  GeneratorTable t = build_table(stream, n, TermPolicy::kMaterialize);
  if (!t.s[n].fits_ulong_p())
    throw std::invalid_argument("bound too small");
  uint64_t sn = t.s[n].get_ui();
  uint64_t N = bound.value_or(sn);
  if (sn > N) throw std::invalid_argument("bound too small");

  IntSetBitmap A = fs_bitmap(t.terms_upto(N), N);
  CoverResult cover = sumset_covers(A, A, sn);

  SumsetCoverReport rep;
  rep.pass = cover.covered;
  rep.first_missing = cover.first_missing;
  rep.depth = n;
  rep.s_n = sn;
  rep.bound = N;
  return rep;
}

namespace {

// Greedy descending representation; valid because the terms always grow
// faster than their partial sums. Empty result means "not a subset sum".
std::optional<std::vector<size_t>> greedy_subset(const mpz_class& x,
                                                 const GeneratorTable& t) {
  mpz_class rem = x;
  std::vector<size_t> picked;
  for (size_t i = t.n + 1; i-- > 0 && rem > 0;) {
    if (t.x[i] <= rem) {
      picked.push_back(i);
      rem -= t.x[i];
    }
  }
  if (rem != 0) return std::nullopt;
  std::reverse(picked.begin(), picked.end());
  return picked;
}

void decompose_rec(const mpz_class& x, const GeneratorTable& t, size_t n,
                   std::vector<size_t>& left, std::vector<size_t>& right) {
  if (x == 0) return;
  if (n == 0) {
    // x <= s_0 = 1
    left.push_back(0);
    return;
  }
  if (x <= t.s[n - 1]) {
    decompose_rec(x, t, n - 1, left, right);
    return;
  }
  if (x >= t.x[n]) {
    decompose_rec(x - t.x[n], t, n - 1, left, right);
    left.push_back(n);
    return;
  }
  // s_{n-1} < x < x_n: the gap. r below reaches at most delta_n - 1, and
  // base-2 deltas step by 0 or 1 from delta_0 = 1, so some prefix hits it.
  mpz_class r = x - t.s[n - 1];
  size_t m = 0;
  while (t.delta[m] != r) {
    ++m;
    if (m > n) throw std::logic_error("delta prefix failed to reach r");
  }
  for (size_t i = m; i < n; ++i) left.push_back(i);
  right.push_back(m);
}

}  // namespace

SumWitness witness_decompose(const mpz_class& x, const GeneratorTable& table) {
  if (table.p != 2)
    throw std::invalid_argument("witness decomposition requires base 2");
  if (!table.materialized())
    throw std::logic_error("witness decomposition requires materialized table");
  if (x < 0) throw std::invalid_argument("target must be non-negative");
  if (x > table.s[table.n])
    throw std::invalid_argument("no witness at this depth");

  SumWitness w;
  w.x = x;
  if (auto greedy = greedy_subset(x, table)) {
    w.left = *greedy;
  } else {
    decompose_rec(x, table, table.n, w.left, w.right);
    std::sort(w.left.begin(), w.left.end());
    std::sort(w.right.begin(), w.right.end());
  }
  w.u = table.subset_sum(w.left);
  w.v = table.subset_sum(w.right);
  if (w.u + w.v != x) throw std::logic_error("witness arithmetic broke");
  return w;
}

DensityReport density_report(const DigitStream& stream,
                             std::optional<uint64_t> t, uint64_t N) {
  if (N < 1) throw std::invalid_argument("bound must be >= 1");
  // Depth: first term beyond N ends the generator list.
  size_t depth = 1;
  {
    mpz_class x = 1;
    Digits d = stream.digits(128);
    while (depth < 128) {
      x = x * stream.p() + d[depth];
      if (x > N) break;
      ++depth;
    }
  }
  GeneratorTable gt = build_table(stream, depth, TermPolicy::kMaterialize);
  IntSetBitmap A = fs_bitmap(gt.terms_upto(N), N);

  DensityReport rep;
  rep.p = stream.p();
  rep.N = N;
  rep.t = t;
  if (stream.is_rational())
    rep.predicted_base = mpq_class(stream.alpha()->den, stream.alpha()->num);

  std::optional<IntSetBitmap> S;
  if (t) S = scaled_sumset(A, *t, N);
  for (uint64_t scale : {N / 100, N / 10, N}) {
    if (scale < 1) scale = 1;
    DensityRow row;
    row.scale = scale;
    row.base = density(A, scale);
    if (S) row.sum = density(*S, scale);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace cantorsum
