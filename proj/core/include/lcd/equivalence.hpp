#pragma once

// Permutation equivalence of binary codes and canonical representatives.
//
// A code is viewed through the multiset of columns of a generator matrix. An
// ordered basis chosen among those columns fixes coordinates for every column;
// sorting the columns by (level, invariant class, coordinates) gives a
// sequence, and the canonical labelling is the lexicographically least
// sequence over all ordered bases. "Level" is the index of the highest basis
// vector a column needs, so the sequence is compared one basis vector at a
// time and the search prunes on prefixes. Invariant classes rank columns by
// multiplicity, then by how many codewords of each weight (ascending, so the
// minimum-weight profile comes first) are nonzero at that column.
//
// Codes with n - k < k are labelled through their duals, which keeps the
// sweeps and the basis search in dimension <= n/2.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lcd/code.hpp"

namespace lcd {

struct CanonicalStats {
  std::uint64_t nodes = 0;
  std::uint64_t automorphisms = 0;
};

/// Canonical labelling of a column multiset spanning GF(2)^dim (dim <= 32).
struct Labelling {
  /// Coordinate vectors of the columns in canonical order.
  std::vector<std::uint64_t> columns;
  /// Input column j lands at canonical position cert[j].
  std::vector<int> cert;
};

Labelling canonical_labelling(std::span<const std::uint64_t> cols, int dim,
                              CanonicalStats* stats = nullptr);

/// Complete invariant of an equivalence class: equal keys iff equivalent.
struct CodeKey {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> columns;

  friend bool operator==(const CodeKey&, const CodeKey&) = default;
  friend auto operator<=>(const CodeKey&, const CodeKey&) = default;
};

struct CodeKeyHash {
  std::size_t operator()(const CodeKey& key) const;
};

struct CanonicalForm {
  /// Reduced row echelon generator of the canonical representative.
  LinearCode code;
  /// Input coordinate j moves to position cert[j].
  std::vector<int> cert;
  CodeKey key;
};

/// Requires 1 <= k <= n. Deterministic, permutation invariant and idempotent.
CanonicalForm canonical_form(const LinearCode& c,
                             CanonicalStats* stats = nullptr);

CodeKey canonical_key(const LinearCode& c, CanonicalStats* stats = nullptr);

/// Same (n, k) and same canonical form; rejects early on differing weight
/// enumerators.
bool are_equivalent(const LinearCode& a, const LinearCode& b);

/// Coordinate j of the input moves to position perm[j].
LinearCode shuffle_columns(const LinearCode& c, std::span<const int> perm);

/// Total order used for published lists: weight enumerator, then generator
/// rows compared as 0/1 strings.
bool presentation_less(const LinearCode& a, const WeightEnumerator& wa,
                       const LinearCode& b, const WeightEnumerator& wb);

/// One canonical representative per class, sorted by presentation_less.
std::vector<LinearCode> deduplicate(std::span<const LinearCode> codes);

}  // namespace lcd
