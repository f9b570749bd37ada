#include "cantorsum/ap.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace cantorsum {

bool ap_contained(const APWitness& ap, const std::vector<int64_t>& Z) {
  for (uint64_t j = 0; j < ap.length; ++j) {
    int64_t v = ap.start + static_cast<int64_t>(j) * ap.diff;
    if (!std::binary_search(Z.begin(), Z.end(), v)) return false;
  }
  return true;
}

APWitness longest_ap(const std::vector<int64_t>& Z) {
  const size_t m = Z.size();
  if (m == 0) throw std::invalid_argument("longest_ap needs a nonempty list");
  for (size_t i = 1; i < m; ++i)
    if (Z[i] <= Z[i - 1])
      throw std::invalid_argument("longest_ap input must be strictly increasing");
  if (m == 1) return {Z[0], 1, 1};
  // The pair table costs 2*m^2 bytes; 8192 keeps it near 128 MB.
  if (m > 8192) throw std::invalid_argument("longest_ap input too large");

  // Direct-address value lookup when the span is modest, else binary search.
  const int64_t lo = Z.front(), hi = Z.back();
  std::vector<int32_t> direct;
  const bool use_direct =
      static_cast<uint64_t>(hi - lo) <= 64 * static_cast<uint64_t>(m) + 1024;
  if (use_direct) {
    direct.assign(static_cast<size_t>(hi - lo) + 1, -1);
    for (size_t i = 0; i < m; ++i) direct[static_cast<size_t>(Z[i] - lo)] = static_cast<int32_t>(i);
  }
  auto index_of = [&](int64_t v) -> int32_t {
    if (v < lo || v > hi) return -1;
    if (use_direct) return direct[static_cast<size_t>(v - lo)];
    auto it = std::lower_bound(Z.begin(), Z.end(), v);
    return (it != Z.end() && *it == v) ? static_cast<int32_t>(it - Z.begin())
                                       : -1;
  };

  // len(i,j) = terms of the AP starting Z[i], Z[j]; filled right to left so
  // every read hits an already-written cell.
  std::unique_ptr<uint16_t[]> len(new uint16_t[m * m]);
  APWitness best{Z[0], 1, 1};
  for (size_t i = m - 1; i-- > 0;) {
    for (size_t j = i + 1; j < m; ++j) {
      __int128 nxt = 2 * static_cast<__int128>(Z[j]) - Z[i];
      int32_t k = -1;
      if (nxt <= hi) k = index_of(static_cast<int64_t>(nxt));
      uint16_t l = 2;
      if (k >= 0) {
        uint32_t ext = 1u + len[j * m + static_cast<size_t>(k)];
        l = static_cast<uint16_t>(std::min<uint32_t>(ext, 65535));
      }
      len[i * m + j] = l;
      int64_t diff = Z[j] - Z[i];
      if (l > best.length ||
          (l == best.length &&
           (diff < best.diff || (diff == best.diff && Z[i] < best.start)))) {
        best = {Z[i], diff, l};
      }
    }
  }
  return best;
}

namespace {

VdwTable make_builtin() {
  VdwTable t = VdwTable::with_extra_file("");
  return t;
}

}  // namespace

const VdwTable& VdwTable::builtin() {
  static const VdwTable t = make_builtin();
  return t;
}

VdwTable VdwTable::with_extra_file(const std::string& json_path) {
  VdwTable t;
  t.entries_ = {
      {2, 3, 9, Provenance::kExhaustive},
      {2, 4, 35, Provenance::kLiterature},
      {2, 5, 178, Provenance::kLiterature},
      {2, 6, 1132, Provenance::kLiterature},
      {3, 3, 27, Provenance::kLiterature},
      {3, 4, 293, Provenance::kLiterature},
      {4, 3, 76, Provenance::kLiterature},
  };
  if (json_path.empty()) return t;
  std::ifstream f(json_path);
  if (!f) throw std::runtime_error("cannot open vdW table " + json_path);
  nlohmann::json j = nlohmann::json::parse(f);
  for (const auto& e : j) {
    VdwEntry v;
    v.s = e.at("s").get<uint32_t>();
    v.k = e.at("k").get<uint32_t>();
    v.W = e.at("W").get<uint64_t>();
    v.prov = e.value("provenance", std::string("literature")) == "exhaustive"
                 ? Provenance::kExhaustive
                 : Provenance::kLiterature;
    if (v.s < 1 || v.k < 1 || v.W < 1)
      throw std::invalid_argument("invalid vdW table entry");
    for (const auto& have : t.entries_)
      if (have.s == v.s && have.k == v.k && have.W != v.W)
        throw std::invalid_argument("vdW table entry contradicts builtin");
    t.entries_.push_back(v);
  }
  // W(s,k) is monotone in both arguments; reject tables that break it.
  auto known = [&](uint32_t s, uint32_t k) { return t.lookup(s, k, false); };
  for (const auto& e : t.entries_) {
    auto right = known(e.s, e.k + 1);
    auto up = known(e.s + 1, e.k);
    auto left = e.k > 1 ? known(e.s, e.k - 1) : std::nullopt;
    auto down = e.s > 1 ? known(e.s - 1, e.k) : std::nullopt;
    if ((right && right->W < e.W) || (up && up->W < e.W) ||
        (left && left->W > e.W) || (down && down->W > e.W))
      throw std::invalid_argument("vdW table entry breaks monotonicity");
  }
  return t;
}

VdwTable VdwTable::from_env() {
  const char* path = std::getenv("CSL_TABLE_PATH");
  if (path && *path) return with_extra_file(path);
  return builtin();
}

std::optional<VdwEntry> VdwTable::lookup(uint32_t s, uint32_t k,
                                         bool certified_only) const {
  if (s < 1 || k < 1) return std::nullopt;
  if (k == 1) return VdwEntry{s, k, 1, Provenance::kExhaustive};
  if (s == 1) return VdwEntry{s, k, k, Provenance::kExhaustive};
  if (k == 2) return VdwEntry{s, k, uint64_t(s) + 1, Provenance::kExhaustive};
  for (const auto& e : entries_) {
    if (e.s == s && e.k == k) {
      if (certified_only && e.prov != Provenance::kExhaustive) return std::nullopt;
      return e;
    }
  }
  return std::nullopt;
}

InverseVdw VdwTable::inverse(uint32_t s, uint64_t N,
                             bool certified_only) const {
  if (s < 1 || N < 1) throw std::invalid_argument("inverse vdW needs s,N >= 1");
  if (s == 1) return {N, false};  // W(1,k) = k exactly
  uint64_t best = 1;
  for (uint32_t k = 2;; ++k) {
    auto e = lookup(s, k, certified_only);
    if (!e) return {best, true};
    if (e->W > N) return {best, false};
    best = k;
  }
}

bool coloring_has_no_mono_ap(const std::vector<uint8_t>& coloring,
                             uint32_t k) {
  const size_t n = coloring.size();
  if (k == 0) throw std::invalid_argument("AP length must be >= 1");
  if (k == 1) return n == 0;
  for (size_t start = 0; start + 1 < n + 1; ++start) {
    for (size_t d = 1; start + size_t(k - 1) * d <= n - 1; ++d) {
      bool mono = true;
      for (uint32_t j = 1; j < k && mono; ++j)
        mono = coloring[start + j * d] == coloring[start];
      if (mono) return false;
    }
  }
  return true;
}

namespace {

struct VdwSearcher {
  uint32_t s, k;
  uint64_t budget;
  uint64_t nodes = 0;
  std::vector<uint8_t> colors;

  // Does assigning colors[pos] complete a monochromatic k-AP ending at pos?
  bool closes_ap(size_t pos) const {
    uint8_t c = colors[pos];
    for (size_t d = 1; pos >= (k - 1) * d; ++d) {
      bool mono = true;
      for (uint32_t j = 1; j < k && mono; ++j)
        mono = colors[pos - j * d] == c;
      if (mono) return true;
    }
    return false;
  }

  // Backtracking feasibility of [1, n]; fills `colors` with a witness when
  // one exists. Position 1 is pinned to color 0 (palette symmetry).
  bool feasible(size_t n) {
    colors.assign(n, 0);
    return extend(0, n);
  }

  bool extend(size_t pos, size_t n) {
    if (pos == n) return true;
    if (++nodes > budget)
      throw std::runtime_error("vdW search infeasible at desk scale");
    uint32_t limit = pos == 0 ? 1 : s;
    for (uint32_t c = 0; c < limit; ++c) {
      colors[pos] = c;
      if (!closes_ap(pos) && extend(pos + 1, n)) return true;
    }
    return false;
  }
};

}  // namespace

VdwCertificate vdw_search(uint32_t s, uint32_t k, uint64_t node_budget) {
  if (s < 1 || k < 1) throw std::invalid_argument("vdW search needs s,k >= 1");
  if (s > 255) throw std::invalid_argument("palette too large for witness");
  VdwCertificate cert;
  cert.s = s;
  cert.k = k;
  if (k == 1) {
    cert.W = 1;
    cert.verified = true;
    return cert;
  }
  if (s == 1) {
    cert.W = k;
    cert.witness.assign(k - 1, 0);
    cert.verified = true;
    return cert;
  }
  if (k == 2) {
    cert.W = uint64_t(s) + 1;
    cert.witness.resize(s);
    for (uint32_t i = 0; i < s; ++i) cert.witness[i] = static_cast<uint8_t>(i);
    cert.verified = true;
    return cert;
  }
  VdwSearcher search{s, k, node_budget};
  std::vector<uint8_t> last_witness;
  for (size_t n = k;; ++n) {
    if (!search.feasible(n)) {
      cert.W = n;
      cert.witness = last_witness;
      cert.verified = true;
      cert.nodes = search.nodes;
      return cert;
    }
    last_witness = search.colors;
  }
}

BoundedGapExtract bounded_gap_ap_extract(const std::vector<int64_t>& Z,
                                         uint32_t K, const VdwTable& table,
                                         bool certified_only) {
  if (Z.empty()) throw std::invalid_argument("empty sequence");
  if (K < 1 || K > 255) throw std::invalid_argument("gap bound out of range");
  for (size_t i = 1; i < Z.size(); ++i) {
    int64_t d = Z[i] - Z[i - 1];
    if (d < 1 || d > static_cast<int64_t>(K))
      throw std::invalid_argument(
          "gap bound violated at index " + std::to_string(i) + ": step " +
          std::to_string(d));
  }

  const uint64_t m = Z.size();
  const uint64_t Q = m / K;
  BoundedGapExtract out;
  if (Q < 1) {
    out.ap = {Z[0], 1, 1};
    return out;
  }

  // Offset of the first element in each width-K block; the gap bound keeps
  // every block nonempty.
  std::vector<uint8_t> chi(Q);
  size_t ptr = 0;
  for (uint64_t i = 0; i < Q; ++i) {
    int64_t blk_lo = Z[0] + static_cast<int64_t>(i * K);
    while (ptr < Z.size() && Z[ptr] < blk_lo) ++ptr;
    if (ptr == Z.size() || Z[ptr] >= blk_lo + K)
      throw std::logic_error("empty block despite gap bound");
    chi[i] = static_cast<uint8_t>(Z[ptr] - blk_lo);
  }

  InverseVdw iv = table.inverse(K, Q, certified_only);
  out.target_length = iv.length;
  out.table_limited = iv.table_limited;

  uint64_t L = iv.length;
  uint64_t found_start = 0, found_d = 1, found_len = 1;
  uint8_t found_color = chi[0];
  if (L <= 1) {
    found_len = 1;
  } else {
    bool found = false;
    for (uint64_t d = 1; !found && (L - 1) * d <= Q - 1; ++d) {
      for (uint64_t start = 0; start + (L - 1) * d <= Q - 1; ++start) {
        uint8_t c = chi[start];
        bool mono = true;
        for (uint64_t j = 1; j < L && mono; ++j)
          mono = chi[start + j * d] == c;
        if (!mono) continue;
        uint64_t len = L;
        while (start + len * d <= Q - 1 && chi[start + len * d] == c) ++len;
        found_start = start;
        found_d = d;
        found_len = len;
        found_color = c;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("guaranteed monochromatic progression not found");
  }

  out.color = found_color;
  out.ap.start = Z[0] + static_cast<int64_t>(found_start * K + found_color);
  out.ap.diff = found_len > 1 ? static_cast<int64_t>(found_d * K) : 1;
  out.ap.length = found_len;
  if (!ap_contained(out.ap, Z))
    throw std::logic_error("extracted progression escaped the sequence");
  return out;
}

std::vector<int64_t> random_bounded_gap_set(uint64_t seed, uint32_t K,
                                            size_t m) {
  if (K < 1 || m < 1) throw std::invalid_argument("need K >= 1 and m >= 1");
  std::mt19937_64 rng(seed);
  const uint64_t bound = (std::numeric_limits<uint64_t>::max() / K) * K;
  std::vector<int64_t> z;
  z.reserve(m);
  z.push_back(0);
  for (size_t i = 1; i < m; ++i) {
    uint64_t r = rng();
    while (r >= bound) r = rng();
    z.push_back(z.back() + 1 + static_cast<int64_t>(r % K));
  }
  return z;
}

}  // namespace cantorsum
