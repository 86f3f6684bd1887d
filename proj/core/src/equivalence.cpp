#include "lcd/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace lcd {

namespace {

// Weight profiles need a 2^dim sweep; above this the classes fall back to
// column multiplicities alone.
constexpr int kProfileMaxDim = 14;
constexpr std::size_t kMaxStoredAutomorphisms = 256;

// Lexicographic comparison of two level blocks inside the full sequence: a
// block that ends first is followed by a higher-level entry, so it is larger.
int compare_blocks(const std::vector<std::uint64_t>& a,
                   const std::vector<std::uint64_t>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? -1 : 1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Search {
 public:
  Search(int dim, std::vector<std::uint64_t> vals, std::vector<std::uint64_t> cls)
      : dim_(dim),
        m_(static_cast<int>(vals.size())),
        cls_(std::move(cls)),
        res_(dim + 1, std::vector<std::uint64_t>(m_)),
        crd_(dim + 1, std::vector<std::uint64_t>(m_, 0)),
        path_(dim, -1),
        path_block_(dim),
        best_block_(dim) {
    res_[0] = std::move(vals);
  }

  void run() { explore(0, false); }

  const std::vector<std::uint64_t>& best_coordinates() const { return best_crd_; }
  CanonicalStats stats() const { return stats_; }

 private:
  void block_for(int level, int p, std::vector<std::uint64_t>& out) const {
    const auto& res = res_[level];
    const auto& crd = crd_[level];
    const std::uint64_t shift = crd[p] ^ (std::uint64_t{1} << level);
    out.clear();
    for (int v = 0; v < m_; ++v) {
      if (res[v] == res[p]) out.push_back(cls_[v] | (crd[v] ^ shift));
    }
    std::sort(out.begin(), out.end());
  }

  void descend(int level, int p) {
    const auto& res = res_[level];
    const auto& crd = crd_[level];
    auto& nres = res_[level + 1];
    auto& ncrd = crd_[level + 1];
    const std::uint64_t q = res[p];
    const std::uint64_t pivot = q & (~q + 1);
    const std::uint64_t shift = crd[p] ^ (std::uint64_t{1} << level);
    for (int v = 0; v < m_; ++v) {
      if (res[v] & pivot) {
        nres[v] = res[v] ^ q;
        ncrd[v] = crd[v] ^ shift;
      } else {
        nres[v] = res[v];
        ncrd[v] = crd[v];
      }
    }
  }

  void record_leaf(bool better) {
    const auto& crd = crd_[dim_];
    if (!have_best_ || better) {
      have_best_ = true;
      best_block_ = path_block_;
      best_crd_ = crd;
      return;
    }
    // Equal sequences: the value with the same coordinates is the image.
    std::vector<std::pair<std::uint64_t, int>> lookup(m_);
    for (int v = 0; v < m_; ++v) lookup[v] = {crd[v], v};
    std::sort(lookup.begin(), lookup.end());
    std::vector<int> sigma(m_);
    bool identity = true;
    for (int v = 0; v < m_; ++v) {
      auto it = std::lower_bound(lookup.begin(), lookup.end(),
                                 std::pair<std::uint64_t, int>{best_crd_[v], -1});
      sigma[v] = it->second;
      identity = identity && sigma[v] == v;
    }
    if (!identity && autos_.size() < kMaxStoredAutomorphisms) {
      autos_.push_back(std::move(sigma));
      ++stats_.automorphisms;
    }
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current path pointwise.
  UnionFind stabilizer_orbits(int level) const {
    UnionFind uf(m_);
    for (const auto& sigma : autos_) {
      bool fixes = true;
      for (int l = 0; l < level && fixes; ++l) fixes = sigma[path_[l]] == path_[l];
      if (!fixes) continue;
      for (int v = 0; v < m_; ++v) uf.unite(v, sigma[v]);
    }
    return uf;
  }

  void explore(int level, bool better) {
    ++stats_.nodes;
    if (level == dim_) {
      record_leaf(better);
      return;
    }

    const auto& res = res_[level];
    std::vector<int> children;
    std::vector<std::uint64_t> best_here;
    std::vector<std::uint64_t> block;
    bool have_here = false;
    for (int p = 0; p < m_; ++p) {
      if (res[p] == 0) continue;
      block_for(level, p, block);
      const int c = have_here ? compare_blocks(block, best_here) : -1;
      if (c < 0) {
        best_here.swap(block);
        children.assign(1, p);
        have_here = true;
      } else if (c == 0) {
        children.push_back(p);
      }
    }

    if (have_best_ && !better) {
      const int c = compare_blocks(best_here, best_block_[level]);
      if (c > 0) return;
      if (c < 0) better = true;
    }
    path_block_[level] = std::move(best_here);

    std::vector<int> explored;
    for (int p : children) {
      if (!explored.empty() && !autos_.empty()) {
        UnionFind uf = stabilizer_orbits(level);
        const int root = uf.find(p);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int q) { return uf.find(q) == root; })) {
          continue;
        }
      }
      path_[level] = p;
      descend(level, p);
      explore(level + 1, better);
      // Whatever happened below, the best sequence now shares this prefix.
      better = false;
      explored.push_back(p);
    }
  }

  int dim_;
  int m_;
  std::vector<std::uint64_t> cls_;
  std::vector<std::vector<std::uint64_t>> res_;
  std::vector<std::vector<std::uint64_t>> crd_;
  std::vector<int> path_;
  std::vector<std::vector<std::uint64_t>> path_block_;
  std::vector<std::vector<std::uint64_t>> best_block_;
  std::vector<std::uint64_t> best_crd_;
  bool have_best_ = false;
  std::vector<std::vector<int>> autos_;
  CanonicalStats stats_;
};

// Invariant class of each distinct value, shifted into the high half of a
// block key.
std::vector<std::uint64_t> invariant_classes(std::span<const std::uint64_t> vals,
                                             std::span<const std::uint32_t> mult,
                                             int dim, int n) {
  const int m = static_cast<int>(vals.size());
  const int width = n + 2;
  std::vector<std::uint32_t> profile(static_cast<std::size_t>(m) * width, 0);
  for (int v = 0; v < m; ++v) profile[v * width] = mult[v];

  if (dim <= kProfileMaxDim && m <= 64) {
    std::vector<std::uint64_t> flips(dim, 0);
    for (int v = 0; v < m; ++v) {
      for (int b = 0; b < dim; ++b) {
        if ((vals[v] >> b) & 1U) flips[b] |= std::uint64_t{1} << v;
      }
    }
    std::uint64_t odd = 0;
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t x = 1; x < total; ++x) {
      odd ^= flips[std::countr_zero(x)];
      int w = 0;
      for (std::uint64_t s = odd; s; s &= s - 1) w += mult[std::countr_zero(s)];
      for (std::uint64_t s = odd; s; s &= s - 1) {
        ++profile[std::countr_zero(s) * width + 1 + w];
      }
    }
  }

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](int v) { return profile.begin() + static_cast<std::ptrdiff_t>(v) * width; };
  auto less = [&](int a, int b) {
    return std::lexicographical_compare(row(a), row(a) + width, row(b), row(b) + width);
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<std::uint64_t> cls(m);
  std::uint64_t rank = 0;
  for (int i = 0; i < m; ++i) {
    if (i > 0 && less(order[i - 1], order[i])) ++rank;
    cls[order[i]] = rank << 32;
  }
  return cls;
}

}  // namespace

Labelling canonical_labelling(std::span<const std::uint64_t> cols, int dim,
                              CanonicalStats* stats) {
  const int n = static_cast<int>(cols.size());
  if (dim < 0 || dim > 32) {
    throw std::invalid_argument("canonical_labelling: dimension must be <= 32");
  }
  for (std::uint64_t c : cols) {
    if (c & ~low_mask(dim)) {
      throw std::invalid_argument("canonical_labelling: column wider than dim");
    }
  }
  if (rank(BinaryMatrix(dim, std::vector<std::uint64_t>(cols.begin(), cols.end()))) != dim) {
    throw std::invalid_argument("canonical_labelling: columns do not span");
  }

  std::vector<std::uint64_t> vals;
  for (std::uint64_t c : cols) {
    if (c) vals.push_back(c);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const int m = static_cast<int>(vals.size());
  std::vector<std::uint32_t> mult(m, 0);
  std::vector<int> value_of(n, -1);
  for (int j = 0; j < n; ++j) {
    if (!cols[j]) continue;
    value_of[j] = static_cast<int>(
        std::lower_bound(vals.begin(), vals.end(), cols[j]) - vals.begin());
    ++mult[value_of[j]];
  }

  std::vector<std::uint64_t> cls = invariant_classes(vals, mult, dim, n);
  std::vector<std::uint64_t> coords(m, 0);
  if (dim > 0) {
    Search search(dim, vals, cls);
    search.run();
    coords = search.best_coordinates();
    if (stats) {
      const CanonicalStats s = search.stats();
      stats->nodes += s.nodes;
      stats->automorphisms += s.automorphisms;
    }
  }

  struct Entry {
    int level;
    std::uint64_t key;
    int index;
  };
  std::vector<Entry> entries(n);
  for (int j = 0; j < n; ++j) {
    const int v = value_of[j];
    const std::uint64_t c = v < 0 ? 0 : coords[v];
    entries[j] = {static_cast<int>(std::bit_width(c)), v < 0 ? 0 : (cls[v] | c), j};
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.key != b.key) return a.key < b.key;
    return a.index < b.index;
  });

  Labelling out;
  out.columns.resize(n);
  out.cert.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    out.columns[pos] = entries[pos].key & 0xffffffffULL;
    out.cert[entries[pos].index] = pos;
  }
  return out;
}

std::size_t CodeKeyHash::operator()(const CodeKey& key) const {
  std::uint64_t h = 1469598103934665603ULL ^ (static_cast<std::uint64_t>(key.n) << 8) ^
                    static_cast<std::uint64_t>(key.k);
  for (std::uint64_t c : key.columns) {
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

CanonicalForm canonical_form(const LinearCode& c, CanonicalStats* stats) {
  const int n = c.length();
  const int k = c.dimension();
  if (k < 1) throw std::invalid_argument("canonical_form requires k >= 1");
  if (k == n) {
    std::vector<int> cert(n);
    std::iota(cert.begin(), cert.end(), 0);
    return {LinearCode::full(n), std::move(cert), CodeKey{n, k, {}}};
  }
  const bool via_dual = n - k < k;
  const BinaryMatrix side = via_dual ? null_space_basis(c.generator()) : c.generator();
  Labelling lab = canonical_labelling(side.column_words(), side.rows(), stats);
  const BinaryMatrix labelled = BinaryMatrix::from_columns(side.rows(), lab.columns);
  LinearCode code(reduced_row_echelon(via_dual ? null_space_basis(labelled) : labelled));
  return {std::move(code), std::move(lab.cert), CodeKey{n, k, std::move(lab.columns)}};
}

CodeKey canonical_key(const LinearCode& c, CanonicalStats* stats) {
  return canonical_form(c, stats).key;
}

bool are_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  if (a.dimension() == 0) return true;
  if (weight_enumerator(a) != weight_enumerator(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

LinearCode shuffle_columns(const LinearCode& c, std::span<const int> perm) {
  return LinearCode(c.generator().permute_columns(perm));
}

bool presentation_less(const LinearCode& a, const WeightEnumerator& wa,
                       const LinearCode& b, const WeightEnumerator& wb) {
  if (wa != wb) return wa < wb;
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  for (int i = 0; i < a.dimension(); ++i) {
    const std::uint64_t x = a.generator().row_bits(i);
    const std::uint64_t y = b.generator().row_bits(i);
    if (x == y) continue;
    // First differing coordinate decides, '0' before '1'.
    return !((x >> std::countr_zero(x ^ y)) & 1U);
  }
  return false;
}

std::vector<LinearCode> deduplicate(std::span<const LinearCode> codes) {
  std::unordered_map<CodeKey, std::size_t, CodeKeyHash> seen;
  std::vector<LinearCode> reps;
  for (const LinearCode& c : codes) {
    CanonicalForm cf = canonical_form(c);
    if (seen.try_emplace(std::move(cf.key), reps.size()).second) {
      reps.push_back(std::move(cf.code));
    }
  }
  std::vector<WeightEnumerator> wes;
  wes.reserve(reps.size());
  for (const auto& r : reps) wes.push_back(weight_enumerator(r));
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return presentation_less(reps[x], wes[x], reps[y], wes[y]);
  });
  std::vector<LinearCode> out;
  out.reserve(reps.size());
  for (std::size_t i : order) out.push_back(reps[i]);
  return out;
}

}  // namespace lcd
