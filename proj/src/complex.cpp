#include "pls/complex.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "pls/error.hpp"

namespace pls {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

void check_label(std::string_view label) {
  if (label.empty()) throw Error(ErrorCode::kInvalidLabel, "vertex label is empty");
  for (char c : label) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::kInvalidLabel,
                  "vertex label '" + std::string(label) + "' contains whitespace or a comma");
  }
}

SimplicialComplex SimplicialComplex::from_label_facets(
    const std::vector<std::vector<std::string>>& raw_facets, std::string name) {
  if (raw_facets.empty()) throw Error(ErrorCode::kEmptyInput, "facet list is empty");
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<Face> facets;
  facets.reserve(raw_facets.size());
  for (const auto& raw : raw_facets) {
    Face f;
    for (const auto& label : raw) {
      check_label(label);
      auto [it, inserted] = index.try_emplace(label, static_cast<std::uint32_t>(labels.size()));
      if (inserted) {
        if (labels.size() == kMaxVertices)
          throw Error(ErrorCode::kTooManyVertices,
                      "more than " + std::to_string(kMaxVertices) + " vertices");
        labels.push_back(label);
      }
      f.insert(it->second);
    }
    facets.push_back(f);
  }
  return from_parts(std::move(labels), std::move(facets), std::move(name));
}

SimplicialComplex SimplicialComplex::from_parts(std::vector<std::string> labels,
                                                std::vector<Face> facets, std::string name) {
  if (facets.empty()) throw Error(ErrorCode::kVoidComplex, "complex has no facets");
  if (labels.size() > kMaxVertices)
    throw Error(ErrorCode::kTooManyVertices,
                "more than " + std::to_string(kMaxVertices) + " vertices");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      check_label(l);
      if (!seen.insert(l).second)
        throw Error(ErrorCode::kLabelCollision, "duplicate vertex label '" + l + "'");
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  VertexSet used;
  for (const auto& f : facets) {
    if (f.last() != kMaxVertices && f.last() >= labels.size())
      throw Error(ErrorCode::kInvalidArgument, "facet refers to a vertex outside the label table");
    used |= f;
  }

  const std::size_t size = facets.front().size();
  const bool uniform = std::all_of(facets.begin(), facets.end(),
                                   [&](const Face& f) { return f.size() == size; });
  // Maximality before purity: a facet inside another facet is reported as
  // such. Distinct facets of equal size are never nested.
  for (std::size_t i = 0; !uniform && i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].size() < facets[j].size() && facets[i].is_subset_of(facets[j])) {
        throw Error(ErrorCode::kNonMaximalFacet, "facet " + join_labels([&] {
                                                   std::vector<std::string> out;
                                                   for (auto v : facets[i]) out.push_back(labels[v]);
                                                   return out;
                                                 }()) + " is contained in another facet");
      }
    }
  }
  for (const auto& f : facets) {
    if (f.size() != size)
      throw Error(ErrorCode::kNotPure, "facets have different cardinalities (" +
                                           std::to_string(size) + " and " +
                                           std::to_string(f.size()) + ")");
  }

  SimplicialComplex k;
  k.name_ = std::move(name);
  k.facet_size_ = size;
  if (used.size() == labels.size()) {
    k.labels_ = std::move(labels);
    k.facets_ = std::move(facets);
    return k;
  }
  // Compact away ghost labels.
  std::vector<std::uint32_t> remap(labels.size(), 0);
  for (std::uint32_t i = 0; i < labels.size(); ++i) {
    if (used.contains(i)) {
      remap[i] = static_cast<std::uint32_t>(k.labels_.size());
      k.labels_.push_back(std::move(labels[i]));
    }
  }
  k.facets_.clear();
  k.facets_.reserve(facets.size());
  for (const auto& f : facets) {
    Face g;
    for (auto v : f) g.insert(remap[v]);
    k.facets_.push_back(g);
  }
  std::sort(k.facets_.begin(), k.facets_.end());
  return k;
}

SimplicialComplex SimplicialComplex::empty_complex(std::string name) {
  SimplicialComplex k;
  k.name_ = std::move(name);
  return k;
}

std::optional<std::uint32_t> SimplicialComplex::index_of(std::string_view label) const {
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::uint32_t SimplicialComplex::require_vertex(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw Error(ErrorCode::kNotAVertex, "'" + std::string(label) + "' is not a vertex");
  return *i;
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
  Face f;
  for (const auto& l : labels) f.insert(require_vertex(l));
  return f;
}

std::vector<std::string> SimplicialComplex::labels_of(const Face& face) const {
  std::vector<std::string> out;
  out.reserve(face.size());
  for (auto v : face) out.push_back(labels_[v]);
  return out;
}

bool SimplicialComplex::is_face(const Face& face) const {
  for (const auto& f : facets_)
    if (face.is_subset_of(f)) return true;
  return false;
}

bool same_labeled(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size())
    return false;
  std::vector<std::string> order = a.labels();
  for (const auto& l : b.labels())
    if (!a.index_of(l)) return false;
  return reorder_labels(b, order).facets() == a.facets();
}

SimplicialComplex reorder_labels(const SimplicialComplex& k,
                                 const std::vector<std::string>& order) {
  if (order.size() != k.vertex_count())
    throw Error(ErrorCode::kInvalidArgument, "label order has the wrong length");
  std::vector<std::uint32_t> remap(k.vertex_count());
  VertexSet hit;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    auto old = k.require_vertex(order[i]);
    if (hit.contains(old)) throw Error(ErrorCode::kInvalidArgument, "label order repeats a label");
    hit.insert(old);
    remap[old] = i;
  }
  std::vector<Face> facets;
  facets.reserve(k.facets().size());
  for (const auto& f : k.facets()) {
    Face g;
    for (auto v : f) g.insert(remap[v]);
    facets.push_back(g);
  }
  return SimplicialComplex::from_parts(order, std::move(facets), k.name());
}

namespace {

void require_face(const SimplicialComplex& k, const Face& sigma) {
  if (!k.is_face(sigma))
    throw Error(ErrorCode::kNotAFace, join_labels(k.labels_of(sigma)) + " is not a face");
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, const Face& sigma) {
  require_face(k, sigma);
  std::vector<Face> facets;
  for (const auto& f : k.facets())
    if (sigma.is_subset_of(f)) facets.push_back(f - sigma);
  if (facets.size() == 1 && facets.front().empty()) return SimplicialComplex::empty_complex();
  return SimplicialComplex::from_parts(k.labels(), std::move(facets));
}

SimplicialComplex star(const SimplicialComplex& k, const Face& sigma) {
  require_face(k, sigma);
  std::vector<Face> facets;
  for (const auto& f : k.facets())
    if (sigma.is_subset_of(f)) facets.push_back(f);
  return SimplicialComplex::from_parts(k.labels(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       JoinOptions options) {
  std::vector<std::string> labels = k.labels();
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  for (auto label : l.labels()) {
    if (taken.count(label)) {
      if (!options.rename_collisions)
        throw Error(ErrorCode::kLabelCollision, "label '" + label + "' occurs in both operands");
      while (taken.count(label) || l.index_of(label)) label += "~";
    }
    taken.insert(label);
    labels.push_back(label);
  }
  if (labels.size() > kMaxVertices)
    throw Error(ErrorCode::kTooManyVertices, "join has too many vertices");
  const auto shift = static_cast<std::uint32_t>(k.vertex_count());
  std::vector<Face> facets;
  facets.reserve(k.facets().size() * l.facets().size());
  for (const auto& f : k.facets()) {
    for (const auto& g : l.facets()) {
      Face h = f;
      for (auto v : g) h.insert(v + shift);
      facets.push_back(h);
    }
  }
  if (facets.size() == 1 && facets.front().empty()) return SimplicialComplex::empty_complex();
  return SimplicialComplex::from_parts(std::move(labels), std::move(facets));
}

SimplicialComplex boundary_of_simplex(const std::vector<std::string>& labels) {
  if (labels.empty())
    throw Error(ErrorCode::kInvalidArgument, "boundary of the empty simplex is void");
  if (labels.size() == 1) return SimplicialComplex::empty_complex();
  const VertexSet all = VertexSet::prefix(labels.size());
  std::vector<Face> facets;
  for (std::uint32_t i = 0; i < labels.size(); ++i) {
    Face f = all;
    f.erase(i);
    facets.push_back(f);
  }
  return SimplicialComplex::from_parts(labels, std::move(facets));
}

SimplicialComplex boundary_of_simplex(const SimplicialComplex& k, const Face& sigma) {
  require_face(k, sigma);
  return boundary_of_simplex(k.labels_of(sigma));
}

namespace {

void collect_non_faces(const SimplicialComplex& k, const Face& current, std::size_t from,
                       std::vector<Face>& out) {
  for (std::size_t v = from; v < k.vertex_count(); ++v) {
    Face next = current;
    next.insert(static_cast<std::uint32_t>(v));
    if (k.is_face(next)) {
      collect_non_faces(k, next, v + 1, out);
      continue;
    }
    bool minimal = true;
    for (auto x : current) {
      Face sub = next;
      sub.erase(x);
      if (!k.is_face(sub)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(next);
  }
}

}  // namespace

std::vector<Face> minimal_non_faces(const SimplicialComplex& k) {
  std::vector<Face> out;
  collect_non_faces(k, Face{}, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct IndependentSetSearch {
  std::size_t m;
  std::vector<std::vector<Face>> by_vertex;  // non-faces containing v
  std::vector<Face> found;

  bool blocked(const Face& current, std::uint32_t v) const {
    Face with = current;
    with.insert(v);
    for (const auto& n : by_vertex[v])
      if (n.is_subset_of(with)) return true;
    return false;
  }

  void run(Face current, std::uint32_t v) {
    if (v == m) {
      for (std::uint32_t u = 0; u < m; ++u)
        if (!current.contains(u) && !blocked(current, u)) return;
      found.push_back(current);
      return;
    }
    if (!blocked(current, v)) {
      Face with = current;
      with.insert(v);
      run(with, v + 1);
    }
    run(current, v + 1);
  }
};

}  // namespace

SimplicialComplex complex_from_minimal_non_faces(const std::vector<std::string>& labels,
                                                 const std::vector<Face>& non_faces) {
  IndependentSetSearch search{labels.size(), std::vector<std::vector<Face>>(labels.size()), {}};
  for (const auto& n : non_faces) {
    if (n.empty()) throw Error(ErrorCode::kVoidComplex, "the empty set is a non-face");
    for (auto v : n) {
      if (v >= labels.size())
        throw Error(ErrorCode::kInvalidArgument, "non-face refers to an unknown vertex");
      search.by_vertex[v].push_back(n);
    }
  }
  search.run(Face{}, 0);
  return SimplicialComplex::from_parts(labels, std::move(search.found));
}

std::optional<std::vector<std::vector<Face>>> faces_by_dimension(const SimplicialComplex& k,
                                                                 std::uint64_t face_budget) {
  const std::size_t n = k.facet_size();
  if (n == 0) return std::vector<std::vector<Face>>{};
  if (n < 64 && (std::uint64_t{1} << n) - 1 > face_budget) return std::nullopt;
  if (n >= 64) return std::nullopt;

  std::vector<std::vector<Face>> levels(n);
  std::uint64_t total = k.facets().size();
  levels[n - 1] = k.facets();
  for (std::size_t size = n; size > 1; --size) {
    std::unordered_set<Face, VertexSetHash> next;
    for (const auto& f : levels[size - 1]) {
      for (auto v : f) {
        Face g = f;
        g.erase(v);
        if (next.insert(g).second && ++total > face_budget) return std::nullopt;
      }
    }
    levels[size - 2].assign(next.begin(), next.end());
    std::sort(levels[size - 2].begin(), levels[size - 2].end());
  }
  return levels;
}

namespace {

// f0, f1, f2 without full enumeration.
std::vector<std::uint64_t> low_dimensional_counts(const SimplicialComplex& k) {
  std::vector<std::uint64_t> counts;
  const std::size_t n = k.facet_size();
  if (n >= 1) counts.push_back(k.vertex_count());
  if (n >= 2) {
    std::vector<VertexSet> nbr(k.vertex_count());
    for (const auto& f : k.facets())
      for (auto v : f) nbr[v] |= f;
    std::uint64_t edges = 0;
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
      VertexSet s = nbr[v];
      s.erase(v);
      edges += s.size();
    }
    counts.push_back(edges / 2);
  }
  if (n >= 3) {
    std::unordered_set<Face, VertexSetHash> triangles;
    for (const auto& f : k.facets()) {
      auto idx = f.to_indices();
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
          for (std::size_t c = b + 1; c < idx.size(); ++c) {
            Face t;
            t.insert(idx[a]);
            t.insert(idx[b]);
            t.insert(idx[c]);
            triangles.insert(t);
          }
    }
    counts.push_back(triangles.size());
  }
  return counts;
}

}  // namespace

FVector f_vector(const SimplicialComplex& k, std::uint64_t face_budget) {
  FVector out;
  auto levels = faces_by_dimension(k, face_budget);
  if (!levels) {
    out.complete = false;
    out.counts = low_dimensional_counts(k);
    return out;
  }
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < levels->size(); ++i) {
    const auto c = static_cast<std::uint64_t>((*levels)[i].size());
    out.counts.push_back(c);
    chi += (i % 2 == 0) ? static_cast<std::int64_t>(c) : -static_cast<std::int64_t>(c);
  }
  out.euler_characteristic = chi;
  return out;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SimplicialComplex& k, const SimplicialComplex& l) : k_(k), l_(l) {
    const std::size_t m = k.vertex_count();
    inc_k_.resize(m);
    inc_l_.resize(m);
    for (std::uint32_t f = 0; f < k.facets().size(); ++f)
      for (auto v : k.facets()[f]) inc_k_[v].push_back(f);
    for (std::uint32_t g = 0; g < l.facets().size(); ++g)
      for (auto v : l.facets()[g]) inc_l_[v].push_back(g);
    image_k_.assign(k.facets().size(), VertexSet{});
    restrict_l_.assign(l.facets().size(), VertexSet{});
    // Empty restrictions hash identically on both sides.
    hash_k_ = hash_l_ = 0;
    map_.assign(m, 0);
    used_.assign(m, false);
    l_sorted_ = l.facets();
  }

  std::optional<std::vector<std::uint32_t>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static std::uint64_t mix(const VertexSet& s) { return s.hash(); }

  void assign(std::uint32_t a, std::uint32_t b) {
    for (auto f : inc_k_[a]) {
      hash_k_ -= mix(image_k_[f]);
      image_k_[f].insert(b);
      hash_k_ += mix(image_k_[f]);
    }
    for (auto g : inc_l_[b]) {
      hash_l_ -= mix(restrict_l_[g]);
      restrict_l_[g].insert(b);
      hash_l_ += mix(restrict_l_[g]);
    }
  }
  void unassign(std::uint32_t a, std::uint32_t b) {
    for (auto f : inc_k_[a]) {
      hash_k_ -= mix(image_k_[f]);
      image_k_[f].erase(b);
      hash_k_ += mix(image_k_[f]);
    }
    for (auto g : inc_l_[b]) {
      hash_l_ -= mix(restrict_l_[g]);
      restrict_l_[g].erase(b);
      hash_l_ += mix(restrict_l_[g]);
    }
  }

  bool search(std::uint32_t a) {
    const std::size_t m = k_.vertex_count();
    if (a == m) {
      std::vector<Face> image = image_k_;
      std::sort(image.begin(), image.end());
      return image == l_sorted_;
    }
    for (std::uint32_t b = 0; b < m; ++b) {
      if (used_[b] || inc_k_[a].size() != inc_l_[b].size()) continue;
      assign(a, b);
      // Necessary condition: the multisets {F ∩ A} and {G ∩ B} agree under the map.
      if (hash_k_ == hash_l_) {
        used_[b] = true;
        map_[a] = b;
        if (search(a + 1)) return true;
        used_[b] = false;
      }
      unassign(a, b);
    }
    return false;
  }

  const SimplicialComplex& k_;
  const SimplicialComplex& l_;
  std::vector<std::vector<std::uint32_t>> inc_k_, inc_l_;
  std::vector<VertexSet> image_k_, restrict_l_;
  std::vector<Face> l_sorted_;
  std::uint64_t hash_k_ = 0, hash_l_ = 0;
  std::vector<std::uint32_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> are_isomorphic(const SimplicialComplex& k,
                                                         const SimplicialComplex& l) {
  if (k.vertex_count() != l.vertex_count() || k.facets().size() != l.facets().size() ||
      k.facet_size() != l.facet_size())
    return std::nullopt;
  auto degrees = [](const SimplicialComplex& c) {
    std::vector<std::size_t> deg(c.vertex_count(), 0);
    for (const auto& f : c.facets())
      for (auto v : f) ++deg[v];
    std::sort(deg.begin(), deg.end());
    return deg;
  };
  if (degrees(k) != degrees(l)) return std::nullopt;
  return IsomorphismSearch(k, l).run();
}

}  // namespace pls
