#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pls/complex.hpp"
#include "pls/operations.hpp"

namespace pls {

/// Unordered vertex pair stored with first < second.
using VertexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Pairs {v, w} such that every facet contains v or w, in lexicographic order.
std::vector<VertexPair> covering_pairs(const SimplicialComplex& k);

enum class PairKind { kWedgedEdge, kSuspendedPair };

struct PairClassification {
  VertexPair pair;
  PairKind kind;
  /// Wedged edge: link(K, w), so that K = wed_v(witness) with copy w.
  /// Suspended pair: link(K, v), so that K = dI * witness.
  SimplicialComplex witness;
};

/// Raises NotCoveringPair, or WitnessVerificationFailed if the reconstruction
/// from the witness does not reproduce K.
PairClassification classify_pair(const SimplicialComplex& k, VertexPair pair);

struct Verdict {
  bool value = false;
  std::string reason;
  /// Wedged edge (for is_seed = false) or suspended pair (for is_suspended = true).
  std::optional<VertexPair> witness;
};

/// Seed iff no covering pair is a face.
Verdict is_seed(const SimplicialComplex& k);
/// Suspended iff some covering pair is a non-face.
Verdict is_suspended(const SimplicialComplex& k);

struct CopyOf {
  std::string seed_label;
  std::uint32_t copy_index = 0;
};

struct SeedDecomposition {
  SimplicialComplex seed;
  MultiplicityTuple j;
  /// Input label -> (seed vertex, copy index).
  std::map<std::string, CopyOf> label_map;
};

/// Peels lexicographically least wedged edges {v, w} (K <- link(K, w)) until a
/// seed remains.
SeedDecomposition seed_decomposition(const SimplicialComplex& k);

/// j_construction(seed, J) is isomorphic to `k`.
bool decomposition_round_trips(const SimplicialComplex& k, const SeedDecomposition& d);

}  // namespace pls
