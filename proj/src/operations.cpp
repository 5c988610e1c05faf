#include "pls/operations.hpp"

#include "pls/error.hpp"

namespace pls {

namespace {

void require_fresh(const SimplicialComplex& k, const std::string& label) {
  check_label(label);
  if (k.index_of(label))
    throw Error(ErrorCode::kLabelCollision, "label '" + label + "' is already a vertex");
}

void require_vertex_index(const SimplicialComplex& k, std::uint32_t v) {
  if (v >= k.vertex_count())
    throw Error(ErrorCode::kNotAVertex, "vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

std::string copy_label(const std::string& base, std::uint32_t k) {
  if (k == 0) return base;
  return base + "#" + std::to_string(k);
}

std::string subdivision_label(const SimplicialComplex& k, const Face& sigma) {
  std::string out = "w{";
  bool first = true;
  for (auto v : sigma) {
    if (!first) out += "+";
    out += k.labels()[v];
    first = false;
  }
  return out + "}";
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma,
                                      const std::string& new_label) {
  if (sigma.empty()) throw Error(ErrorCode::kNotAFace, "cannot subdivide the empty face");
  if (!k.is_face(sigma))
    throw Error(ErrorCode::kNotAFace, "subdivision target is not a face");
  require_fresh(k, new_label);

  if (sigma.size() == 1) {
    auto labels = k.labels();
    labels[sigma.first()] = new_label;
    return SimplicialComplex::from_parts(std::move(labels), k.facets());
  }

  auto labels = k.labels();
  const auto w = static_cast<std::uint32_t>(labels.size());
  labels.push_back(new_label);
  std::vector<Face> facets;
  facets.reserve(k.facets().size() + sigma.size());
  for (const auto& f : k.facets()) {
    if (!sigma.is_subset_of(f)) {
      facets.push_back(f);
      continue;
    }
    // {w} ∪ (σ \ {x}) ∪ (F \ σ) for each x ∈ σ.
    for (auto x : sigma) {
      Face g = f;
      g.erase(x);
      g.insert(w);
      facets.push_back(g);
    }
  }
  return SimplicialComplex::from_parts(std::move(labels), std::move(facets));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma) {
  return stellar_subdivision(k, sigma, subdivision_label(k, sigma));
}

SimplicialComplex wedge(const SimplicialComplex& k, std::uint32_t v, const std::string& copy) {
  require_vertex_index(k, v);
  require_fresh(k, copy);
  auto labels = k.labels();
  const auto c = static_cast<std::uint32_t>(labels.size());
  labels.push_back(copy);
  std::vector<Face> facets;
  facets.reserve(2 * k.facets().size());
  for (const auto& f : k.facets()) {
    Face g = f;
    g.insert(c);
    facets.push_back(g);
    if (!f.contains(v)) {
      Face h = f;
      h.insert(v);
      facets.push_back(h);
    }
  }
  return SimplicialComplex::from_parts(std::move(labels), std::move(facets));
}

SimplicialComplex wedge_via_nonface_duplication(const SimplicialComplex& k, std::uint32_t v,
                                                const std::string& copy) {
  require_vertex_index(k, v);
  require_fresh(k, copy);
  auto labels = k.labels();
  const auto c = static_cast<std::uint32_t>(labels.size());
  labels.push_back(copy);
  auto non_faces = minimal_non_faces(k);
  for (auto& n : non_faces)
    if (n.contains(v)) n.insert(c);
  return complex_from_minimal_non_faces(labels, non_faces);
}

SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north,
                             const std::string& south) {
  require_fresh(k, north);
  require_fresh(k, south);
  if (north == south)
    throw Error(ErrorCode::kLabelCollision, "suspension apexes need distinct labels");
  auto interval = SimplicialComplex::from_label_facets({{north}, {south}});
  // K first so that K keeps its indices; apexes come last.
  return join(k, interval);
}

SimplicialComplex j_construction(const SimplicialComplex& k, const MultiplicityTuple& j) {
  if (j.size() != k.vertex_count())
    throw Error(ErrorCode::kLengthMismatch, "J has " + std::to_string(j.size()) +
                                                " entries for " +
                                                std::to_string(k.vertex_count()) + " vertices");
  for (auto x : j)
    if (x == 0) throw Error(ErrorCode::kInvalidArgument, "J entries must be positive");
  SimplicialComplex out = k;
  for (std::uint32_t v = 0; v < j.size(); ++v)
    for (std::uint32_t copy = 1; copy < j[v]; ++copy)
      out = wedge(out, v, copy_label(k.labels()[v], copy));
  out.set_name(k.name());
  return out;
}

namespace {

void check_selection(const SimplicialComplex& k, const MultiplicityTuple& j,
                     const SelectionTuple& s) {
  if (j.size() != k.vertex_count() || s.size() != k.vertex_count())
    throw Error(ErrorCode::kLengthMismatch, "J and s must have one entry per vertex");
  for (std::size_t v = 0; v < j.size(); ++v) {
    if (j[v] == 0) throw Error(ErrorCode::kInvalidArgument, "J entries must be positive");
    if (s[v] >= j[v])
      throw Error(ErrorCode::kBoundsViolation,
                  "s[" + std::to_string(v) + "] = " + std::to_string(s[v]) +
                      " is not below J[" + std::to_string(v) + "] = " + std::to_string(j[v]));
  }
}

}  // namespace

Face assembled_face(const SimplicialComplex& k, const MultiplicityTuple& j,
                    const SelectionTuple& s, const SimplicialComplex& kj) {
  check_selection(k, j, s);
  Face face;
  for (std::size_t v = 0; v < j.size(); ++v) {
    if (j[v] == 1) continue;
    face.insert(kj.require_vertex(copy_label(k.labels()[v], s[v])));
  }
  if (!kj.is_face(face))
    throw Error(ErrorCode::kInternal, "assembled face is not a face of K(J)");
  return face;
}

Face assembled_face(const SimplicialComplex& k, const MultiplicityTuple& j,
                    const SelectionTuple& s) {
  check_selection(k, j, s);
  return assembled_face(k, j, s, j_construction(k, j));
}

}  // namespace pls
