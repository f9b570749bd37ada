#include "cantorsum/cantor_struct.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cantorsum {

namespace {

uint64_t choose2(uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

PrefixSpec::PrefixSpec(PrefixFamily f, uint64_t k_, uint64_t r_)
    : family(f), k(k_), r(r_) {
  switch (family) {
    case PrefixFamily::kP1:
      if (k <= 2) throw std::invalid_argument("P1 needs k > 2");
      break;
    case PrefixFamily::kP2:
      if (k <= 4) throw std::invalid_argument("P2 needs k > 4");
      break;
    case PrefixFamily::kP3:
      if (k <= 8) throw std::invalid_argument("P3 needs k > 8");
      break;
    case PrefixFamily::kP4:
      if (r < 10) throw std::invalid_argument("P4 needs r >= 10");
      if (k <= r + 1) throw std::invalid_argument("P4 needs k > r+1");
      break;
  }
}

uint64_t PrefixSpec::interval_top() const {
  switch (family) {
    case PrefixFamily::kP1: return 1;
    case PrefixFamily::kP2: return 3;
    case PrefixFamily::kP3: return 7;
    case PrefixFamily::kP4: return r;
  }
  return 0;
}

std::vector<uint64_t> construct_generators(const PrefixSpec& spec) {
  switch (spec.family) {
    case PrefixFamily::kP1: return {1, spec.k};
    case PrefixFamily::kP2: return {1, 2, spec.k};
    case PrefixFamily::kP3: return {1, 2, 4, spec.k};
    case PrefixFamily::kP4: break;
  }

  // P4: n with C(n+1,2) <= r < C(n+2,2); {1..n-1, n+s} sums to r and its
  // subset sums tile [0, r] when n+s <= C(n,2)+1. The single in-range
  // exception is s = n = 4 (r = 14), where the two blocks [0, C(n,2)] and
  // [n+s, r] leave 7 uncovered; a capped-doubling set fills [0, r] exactly
  // in that case.
  uint64_t n = 1;
  while (choose2(n + 2) <= spec.r) ++n;
  uint64_t s = spec.r - choose2(n + 1);
  std::vector<uint64_t> B;
  if (n + s <= choose2(n) + 1) {
    for (uint64_t i = 1; i + 1 <= n; ++i) B.push_back(i);
    B.push_back(n + s);
  } else {
    uint64_t sum = 0;
    while (sum < spec.r) {
      uint64_t next = std::min(sum + 1, spec.r - sum);
      if (!B.empty() && next <= B.back())
        throw std::logic_error("prefix fallback failed to stay increasing");
      B.push_back(next);
      sum += next;
    }
  }
  B.push_back(spec.k);
  return B;
}

bool check_prefix_condition(uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return choose2(n + 1) - n >= choose2(n + 2) - choose2(n + 1);
}

bool prefix_realized(const PrefixSpec& spec, const std::vector<uint64_t>& B) {
  IntSetBitmap fs = fs_bitmap(B, spec.k);
  uint64_t top = spec.interval_top();
  for (uint64_t i = 0; i <= top; ++i)
    if (!fs.test(i)) return false;
  for (uint64_t i = top + 1; i < spec.k; ++i)
    if (fs.test(i)) return false;
  return fs.test(spec.k);
}

SuperIncreasingCheck superincreasing(const std::vector<uint64_t>& B) {
  if (B.empty() || B[0] != 1) return {false, 1};
  uint64_t sum = 0;
  for (size_t i = 0; i < B.size(); ++i) {
    if (B[i] <= sum) return {false, i + 1};
    sum += B[i];
  }
  return {true, 0};
}

CantorTypeCheck cantor_type_check(const std::vector<uint64_t>& B, uint64_t N) {
  CantorTypeCheck out;
  IntSetBitmap full = fs_bitmap(B, N);
  out.shift_invariance = piecewise_shift_invariant(full);

  out.decomposition_ok = true;
  IntSetBitmap reach(N);
  reach.set(0);
  for (size_t depth = 0; depth < B.size(); ++depth) {
    if (B[depth] > N) break;
    IntSetBitmap step(N);
    step.set(0);
    step.set(B[depth]);
    IntSetBitmap combined = sumset(reach, step, N);
    std::vector<uint64_t> prefix(B.begin(), B.begin() + depth + 1);
    if (!(combined == fs_bitmap(prefix, N))) {
      out.decomposition_ok = false;
      out.decomposition_fail_depth = depth + 1;
      break;
    }
    reach = combined;
  }

  out.pass = out.shift_invariance.pass && out.decomposition_ok;
  return out;
}

CantorTypeCheck verify_converse(const std::vector<uint64_t>& B, uint64_t N) {
  auto si = superincreasing(B);
  if (!si.pass)
    throw std::invalid_argument(
        "converse requires a super-increasing generator set (violated at "
        "element " +
        std::to_string(si.first_violation) + ")");
  return cantor_type_check(B, N);
}

RecoveredGenerators recover_generators(const IntSetBitmap& A) {
  if (!A.test(0) || !A.test(1))
    throw std::invalid_argument("recovery requires 0 and 1 in the set");
  RecoveredGenerators out;
  out.resolvable_bound = A.bound();

  IntSetBitmap reach(A.bound());
  reach.set(0);
  uint64_t cursor = 0;
  while (true) {
    // Least member of A missing from the current subset-sum reach.
    std::optional<uint64_t> candidate;
    for (auto m = A.next_member(cursor); m; m = A.next_member(*m + 1)) {
      if (!reach.test(*m)) {
        candidate = *m;
        break;
      }
      cursor = *m + 1;
    }
    if (!candidate) break;
    out.generators.push_back(*candidate);
    reach.or_shifted(reach, *candidate);
  }

  out.validated = true;
  for (uint64_t w = 0; w < reach.words().size(); ++w) {
    uint64_t diff = reach.words()[w] ^ A.words()[w];
    if (diff) {
      out.validated = false;
      out.first_mismatch = w * 64 + std::countr_zero(diff);
      break;
    }
  }
  return out;
}

}  // namespace cantorsum
