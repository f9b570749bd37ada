#include "cantorsum/intset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>

namespace cantorsum {

namespace {

constexpr uint64_t kAllOnes = ~uint64_t(0);

size_t word_count(uint64_t bound) {
  return static_cast<size_t>(bound / 64 + 1);
}

// Mask of valid bits in the last word of a bitmap with the given bound.
uint64_t tail_mask(uint64_t bound) {
  unsigned used = static_cast<unsigned>(bound % 64) + 1;
  return used == 64 ? kAllOnes : ((uint64_t(1) << used) - 1);
}

}  // namespace

IntSetBitmap::IntSetBitmap(uint64_t bound)
    : bound_(bound), words_(word_count(bound), 0) {}

void IntSetBitmap::set(uint64_t i) {
  if (i > bound_) throw std::out_of_range("bit beyond bitmap bound");
  words_[i >> 6] |= uint64_t(1) << (i & 63);
}

uint64_t IntSetBitmap::count() const {
  uint64_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

uint64_t IntSetBitmap::count_upto(uint64_t n) const {
  if (n >= bound_) return count();
  size_t full = static_cast<size_t>(n / 64);
  uint64_t c = 0;
  for (size_t i = 0; i < full; ++i) c += std::popcount(words_[i]);
  c += std::popcount(words_[full] & tail_mask(n));
  return c;
}

std::optional<uint64_t> IntSetBitmap::max_member() const {
  for (size_t i = words_.size(); i-- > 0;) {
    if (words_[i])
      return uint64_t(i) * 64 + (63 - std::countl_zero(words_[i]));
  }
  return std::nullopt;
}

std::optional<uint64_t> IntSetBitmap::min_member() const {
  return next_member(0);
}

std::optional<uint64_t> IntSetBitmap::next_member(uint64_t from) const {
  if (from > bound_) return std::nullopt;
  size_t w = static_cast<size_t>(from >> 6);
  uint64_t cur = words_[w] & (kAllOnes << (from & 63));
  while (true) {
    if (cur) return uint64_t(w) * 64 + std::countr_zero(cur);
    if (++w >= words_.size()) return std::nullopt;
    cur = words_[w];
  }
}

std::vector<uint64_t> IntSetBitmap::members(size_t limit) const {
  std::vector<uint64_t> out;
  for (size_t w = 0; w < words_.size() && out.size() < limit; ++w) {
    uint64_t cur = words_[w];
    while (cur && out.size() < limit) {
      out.push_back(uint64_t(w) * 64 + std::countr_zero(cur));
      cur &= cur - 1;
    }
  }
  return out;
}

void IntSetBitmap::or_shifted(const IntSetBitmap& src, uint64_t shift) {
  if (shift > bound_) return;
  const size_t wq = static_cast<size_t>(shift >> 6);
  const unsigned wr = static_cast<unsigned>(shift & 63);
  const size_t nw = words_.size();
  const size_t ns = src.words_.size();
  // Descending so self-shifts read unmodified source words.
  for (size_t i = nw; i-- > wq;) {
    size_t si = i - wq;
    uint64_t v = 0;
    if (si < ns) v = src.words_[si] << wr;
    if (wr && si >= 1 && si - 1 < ns) v |= src.words_[si - 1] >> (64 - wr);
    words_[i] |= v;
  }
  words_.back() &= tail_mask(bound_);
}

bool IntSetBitmap::shifted_range_subset(uint64_t lo, uint64_t hi,
                                        uint64_t t) const {
  if (lo > hi) return true;
  if (hi + t > bound_) throw std::out_of_range("shifted range beyond bound");
  auto chunk = [&](uint64_t pos) -> uint64_t {
    // 64 bits of the set starting at pos; bits beyond the bound read as 0.
    size_t w = static_cast<size_t>(pos >> 6);
    unsigned b = static_cast<unsigned>(pos & 63);
    uint64_t v = w < words_.size() ? words_[w] >> b : 0;
    if (b && w + 1 < words_.size()) v |= words_[w + 1] << (64 - b);
    return v;
  };
  for (uint64_t pos = lo; pos <= hi; pos += 64) {
    uint64_t width = std::min<uint64_t>(64, hi - pos + 1);
    uint64_t mask = width == 64 ? kAllOnes : ((uint64_t(1) << width) - 1);
    uint64_t src = chunk(pos) & mask;
    if (src & ~chunk(pos + t)) return false;
  }
  return true;
}

std::vector<uint8_t> IntSetBitmap::serialize() const {
  std::vector<uint8_t> out;
  out.reserve(16 + words_.size() * 8);
  const char magic[4] = {'C', 'S', 'L', 'B'};
  out.insert(out.end(), magic, magic + 4);
  uint32_t version = 1;
  for (int i = 0; i < 4; ++i) out.push_back((version >> (8 * i)) & 0xff);
  for (int i = 0; i < 8; ++i) out.push_back((bound_ >> (8 * i)) & 0xff);
  for (uint64_t w : words_)
    for (int i = 0; i < 8; ++i) out.push_back((w >> (8 * i)) & 0xff);
  return out;
}

IntSetBitmap IntSetBitmap::deserialize(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 16 || bytes[0] != 'C' || bytes[1] != 'S' ||
      bytes[2] != 'L' || bytes[3] != 'B')
    throw std::invalid_argument("not a CSLB bitmap");
  uint32_t version = 0;
  for (int i = 0; i < 4; ++i) version |= uint32_t(bytes[4 + i]) << (8 * i);
  if (version != 1) throw std::invalid_argument("unsupported CSLB version");
  uint64_t bound = 0;
  for (int i = 0; i < 8; ++i) bound |= uint64_t(bytes[8 + i]) << (8 * i);
  IntSetBitmap s(bound);
  size_t need = 16 + s.words_.size() * 8;
  if (bytes.size() != need)
    throw std::invalid_argument("CSLB payload size mismatch");
  for (size_t w = 0; w < s.words_.size(); ++w) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(bytes[16 + w * 8 + i]) << (8 * i);
    s.words_[w] = v;
  }
  s.words_.back() &= tail_mask(bound);
  return s;
}

void IntSetBitmap::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  auto bytes = serialize();
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
}

IntSetBitmap IntSetBitmap::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                             std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

IntSetBitmap fs_bitmap(const std::vector<uint64_t>& B, uint64_t N) {
  IntSetBitmap s(N);
  s.set(0);
  uint64_t prev = 0;
  for (uint64_t b : B) {
    if (b < 1) throw std::invalid_argument("generator terms must be >= 1");
    if (b < prev) throw std::invalid_argument("generators must be ascending");
    prev = b;
    if (b > N) break;
    s.or_shifted(s, b);
  }
  return s;
}

IntSetBitmap fs_bitmap(const std::vector<mpz_class>& B, uint64_t N) {
  std::vector<uint64_t> small;
  for (const mpz_class& b : B) {
    if (b > N) break;
    small.push_back(b.get_ui());
  }
  return fs_bitmap(small, N);
}

namespace {

// Advances the first-incomplete-word pointer; returns true when [0, N] full.
bool advance_full(const IntSetBitmap& s, size_t& f) {
  const auto& w = s.words();
  while (f < w.size()) {
    uint64_t want = (f + 1 == w.size()) ? tail_mask(s.bound()) : kAllOnes;
    if (w[f] != want) return false;
    ++f;
  }
  return true;
}

}  // namespace

IntSetBitmap sumset(const IntSetBitmap& A, const IntSetBitmap& B, uint64_t N) {
  const IntSetBitmap* iter = &A;
  const IntSetBitmap* other = &B;
  if (B.count_upto(N) < A.count_upto(N)) std::swap(iter, other);
  IntSetBitmap out(N);
  size_t f = 0;
  for (auto a = iter->min_member(); a && *a <= N;
       a = iter->next_member(*a + 1)) {
    out.or_shifted(*other, *a);
    if (advance_full(out, f)) break;
  }
  return out;
}

IntSetBitmap scaled_sumset(const IntSetBitmap& A, uint64_t t, uint64_t N) {
  if (t < 1) throw std::invalid_argument("scale must be >= 1");
  IntSetBitmap out(N);
  size_t f = 0;
  for (auto b = A.min_member(); b && *b <= N / t;
       b = A.next_member(*b + 1)) {
    out.or_shifted(A, *b * t);
    if (advance_full(out, f)) break;
  }
  return out;
}

CoverResult sumset_covers(const IntSetBitmap& A, const IntSetBitmap& B,
                          uint64_t hi) {
  IntSetBitmap out(hi);
  size_t f = 0;
  auto first_missing = [&]() -> std::optional<uint64_t> {
    const auto& w = out.words();
    while (f < w.size()) {
      uint64_t want = (f + 1 == w.size()) ? tail_mask(hi) : kAllOnes;
      if (w[f] != want) {
        uint64_t miss = uint64_t(f) * 64 + std::countr_zero(~w[f] & want);
        return miss;
      }
      ++f;
    }
    return std::nullopt;
  };
  for (auto a = A.min_member(); a && *a <= hi; a = A.next_member(*a + 1)) {
    auto miss = first_missing();
    if (!miss) return {true, 0};
    // Positions below *a can only be hit by members already processed.
    if (*a > *miss) return {false, *miss};
    out.or_shifted(B, *a);
  }
  auto miss = first_missing();
  if (!miss) return {true, 0};
  return {false, *miss};
}

std::vector<Gap> gaps(const IntSetBitmap& S) {
  if (!S.test(0)) throw std::invalid_argument("gap scan requires 0 in the set");
  std::vector<Gap> out;
  uint64_t prev = 0;
  for (auto m = S.next_member(1); m; m = S.next_member(*m + 1)) {
    if (*m > prev + 1) out.push_back({prev, *m});
    prev = *m;
  }
  return out;
}

mpq_class density(const IntSetBitmap& S, uint64_t N) {
  if (N > S.bound()) throw std::out_of_range("density bound beyond bitmap");
  mpq_class q(mpz_class(S.count_upto(N)), mpz_class(N) + 1);
  q.canonicalize();
  return q;
}

ShiftInvarianceReport piecewise_shift_invariant(const IntSetBitmap& S) {
  ShiftInvarianceReport rep;
  auto gs = gaps(S);
  if (gs.empty()) return rep;  // vacuous pass
  uint64_t top = *S.max_member();

  // Nearest previous gap at least as long, via a monotonic stack.
  std::vector<ptrdiff_t> prev_ge(gs.size(), -1);
  std::vector<size_t> stack;
  for (size_t i = 0; i < gs.size(); ++i) {
    while (!stack.empty() && gs[stack.back()].missing() < gs[i].missing())
      stack.pop_back();
    prev_ge[i] = stack.empty() ? -1 : static_cast<ptrdiff_t>(stack.back());
    stack.push_back(i);
  }

  rep.checks.reserve(gs.size());
  for (size_t i = 0; i < gs.size(); ++i) {
    GapCheck c;
    c.gap = gs[i];
    c.block_start = prev_ge[i] < 0 ? 0 : gs[prev_ge[i]].right;
    c.shift = gs[i].right - c.block_start;
    bool unresolved = false;
    bool violated = false;

    // Block translation: members of [alpha, beta] must land in the set.
    uint64_t beta = gs[i].left;
    uint64_t checkable_hi = top >= c.shift ? top - c.shift : 0;
    uint64_t hi = std::min(beta, checkable_hi);
    if (beta > checkable_hi) unresolved = true;
    if (c.block_start <= hi &&
        !S.shifted_range_subset(c.block_start, hi, c.shift))
      violated = true;

    // Gap translation: the shifted interior must be absent.
    if (!violated) {
      uint64_t img_lo = gs[i].left + c.shift + 1;
      uint64_t img_hi = gs[i].right + c.shift - 1;
      if (gs[i].right + c.shift > top) {
        unresolved = true;
        img_hi = std::min(img_hi, top);
      }
      if (img_lo <= img_hi) {
        auto m = S.next_member(img_lo);
        if (m && *m <= img_hi) violated = true;
      }
    }

    if (violated) {
      c.status = GapStatus::kViolated;
      if (rep.first_violation < 0)
        rep.first_violation = static_cast<ptrdiff_t>(i);
      rep.pass = false;
    } else if (unresolved) {
      c.status = GapStatus::kUnresolved;
      ++rep.unresolved;
    }
    rep.checks.push_back(c);
  }
  return rep;
}

std::vector<uint32_t> ruler_sequence(size_t n) {
  if (n < 1) throw std::invalid_argument("ruler sequence needs n >= 1");
  std::vector<uint32_t> out;
  out.reserve(n);
  for (size_t k = 1; k <= n; ++k)
    out.push_back(static_cast<uint32_t>(std::countr_zero(k)) + 1);
  return out;
}

RulerCorrespondence gap_index_correspondence(uint32_t level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (level > 18) throw std::invalid_argument("level too large for desk scale");
  uint64_t pow3 = 1;
  std::vector<uint64_t> B;
  for (uint32_t i = 0; i < level; ++i) {
    B.push_back(2 * pow3);
    pow3 *= 3;
  }
  RulerCorrespondence rc;
  IntSetBitmap D = fs_bitmap(B, pow3 - 1);
  for (const Gap& g : gaps(D)) {
    uint64_t len = g.missing();
    uint32_t j = 1;
    uint64_t p = 1;
    while (p < len) {
      p *= 3;
      ++j;
    }
    if (p != len) return rc;  // gap length not a power of 3: no correspondence
    rc.gap_indices.push_back(j);
  }
  size_t expect = (size_t(1) << level) - 1;
  if (rc.gap_indices.size() != expect) return rc;
  rc.pass = rc.gap_indices == ruler_sequence(expect);
  return rc;
}

}  // namespace cantorsum
