#include "pls/classify.hpp"

#include <algorithm>

#include "pls/error.hpp"

namespace pls {

namespace {

// Per-vertex incidence bitmaps over the facet list.
class Incidence {
 public:
  explicit Incidence(const SimplicialComplex& k)
      : words_((k.facets().size() + 63) / 64), rows_(k.vertex_count()) {
    for (auto& r : rows_) r.assign(words_, 0);
    for (std::size_t f = 0; f < k.facets().size(); ++f)
      for (auto v : k.facets()[f]) rows_[v][f >> 6] |= std::uint64_t{1} << (f & 63);
    full_.assign(words_, ~std::uint64_t{0});
    if (const auto tail = k.facets().size() % 64; tail != 0 && words_ > 0)
      full_.back() = (std::uint64_t{1} << tail) - 1;
  }

  bool covers(std::uint32_t v, std::uint32_t w) const {
    for (std::size_t i = 0; i < words_; ++i)
      if ((rows_[v][i] | rows_[w][i]) != full_[i]) return false;
    return true;
  }

 private:
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> full_;
};

std::string pair_text(const SimplicialComplex& k, VertexPair p) {
  return "{" + k.labels()[p.first] + "," + k.labels()[p.second] + "}";
}

Face pair_face(VertexPair p) {
  Face f;
  f.insert(p.first);
  f.insert(p.second);
  return f;
}

bool reproduces(const SimplicialComplex& candidate, const SimplicialComplex& k) {
  return same_labeled(candidate, k) || are_isomorphic(candidate, k).has_value();
}

}  // namespace

std::vector<VertexPair> covering_pairs(const SimplicialComplex& k) {
  std::vector<VertexPair> out;
  if (k.vertex_count() < 2) return out;
  const Incidence inc(k);
  const auto m = static_cast<std::uint32_t>(k.vertex_count());
  for (std::uint32_t v = 0; v < m; ++v)
    for (std::uint32_t w = v + 1; w < m; ++w)
      if (inc.covers(v, w)) out.emplace_back(v, w);
  return out;
}

PairClassification classify_pair(const SimplicialComplex& k, VertexPair pair) {
  if (pair.first > pair.second) std::swap(pair.first, pair.second);
  if (pair.first == pair.second || pair.second >= k.vertex_count())
    throw Error(ErrorCode::kInvalidArgument, "pair must consist of two distinct vertices");
  if (!Incidence(k).covers(pair.first, pair.second))
    throw Error(ErrorCode::kNotCoveringPair,
                pair_text(k, pair) + " is not a covering pair: some facet avoids both");

  const auto& v_label = k.labels()[pair.first];
  const auto& w_label = k.labels()[pair.second];
  if (k.is_face(pair_face(pair))) {
    auto base = link(k, Face::singleton(pair.second));
    auto rebuilt = wedge(base, base.require_vertex(v_label), w_label);
    if (!reproduces(rebuilt, k))
      throw Error(ErrorCode::kWitnessVerificationFailed,
                  "wedge of link(" + w_label + ") does not reproduce the complex");
    return {pair, PairKind::kWedgedEdge, std::move(base)};
  }
  auto base = link(k, Face::singleton(pair.first));
  auto rebuilt = suspension(base, v_label, w_label);
  if (!reproduces(rebuilt, k))
    throw Error(ErrorCode::kWitnessVerificationFailed,
                "suspension of link(" + v_label + ") does not reproduce the complex");
  return {pair, PairKind::kSuspendedPair, std::move(base)};
}

Verdict is_seed(const SimplicialComplex& k) {
  for (const auto& p : covering_pairs(k)) {
    if (k.is_face(pair_face(p)))
      return {false, "wedged edge " + pair_text(k, p), p};
  }
  return {true, "no covering pair is a face", std::nullopt};
}

Verdict is_suspended(const SimplicialComplex& k) {
  for (const auto& p : covering_pairs(k)) {
    if (!k.is_face(pair_face(p)))
      return {true, "suspended pair " + pair_text(k, p), p};
  }
  return {false, "no covering pair is a non-face", std::nullopt};
}

SeedDecomposition seed_decomposition(const SimplicialComplex& k) {
  SimplicialComplex current = k;
  // Removed label -> label it was a copy of (in the complex it was removed from).
  std::vector<std::pair<std::string, std::string>> removed;
  while (true) {
    std::optional<VertexPair> edge;
    for (const auto& p : covering_pairs(current)) {
      if (current.is_face(pair_face(p))) {
        edge = p;
        break;
      }
    }
    if (!edge) break;
    removed.emplace_back(current.labels()[edge->second], current.labels()[edge->first]);
    current = link(current, Face::singleton(edge->second));
  }

  SeedDecomposition out{current, MultiplicityTuple(current.vertex_count(), 1), {}};
  out.seed.set_name(k.name());
  for (const auto& label : current.labels()) out.label_map[label] = {label, 0};
  // Resolve in reverse removal order: a vertex's representative was still
  // present when it was removed, so it is resolved later in this loop.
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const CopyOf& rep = out.label_map.at(it->second);
    const auto v = current.require_vertex(rep.seed_label);
    out.label_map[it->first] = {rep.seed_label, out.j[v]};
    ++out.j[v];
  }
  return out;
}

bool decomposition_round_trips(const SimplicialComplex& k, const SeedDecomposition& d) {
  return are_isomorphic(j_construction(d.seed, d.j), k).has_value();
}

}  // namespace pls
