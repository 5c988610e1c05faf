#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pls/complex.hpp"
#include "pls/family.hpp"
#include "pls/operations.hpp"

namespace pls::test {

using LabelSet = std::set<std::string>;
using FacetSet = std::set<LabelSet>;

inline FacetSet facet_labels(const SimplicialComplex& k) {
  FacetSet out;
  for (const auto& f : k.facets()) {
    auto labels = k.labels_of(f);
    out.insert(LabelSet(labels.begin(), labels.end()));
  }
  return out;
}

inline SimplicialComplex complex_of(const std::vector<std::vector<std::string>>& facets,
                                    std::string name = {}) {
  return SimplicialComplex::from_label_facets(facets, std::move(name));
}

inline Face face(const SimplicialComplex& k, const std::vector<std::string>& labels) {
  return k.face_from_labels(labels);
}

// Every face (including the empty one), as label sets; brute force over facet subsets.
inline std::set<LabelSet> all_faces(const SimplicialComplex& k) {
  std::set<LabelSet> out;
  for (const auto& f : k.facets()) {
    const auto labels = k.labels_of(f);
    const std::size_t n = labels.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      LabelSet s;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) s.insert(labels[i]);
      out.insert(s);
    }
  }
  return out;
}

// Inclusion-maximal members.
inline FacetSet maximal(const std::set<LabelSet>& faces) {
  FacetSet out;
  for (const auto& a : faces) {
    bool is_max = true;
    for (const auto& b : faces) {
      if (b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        is_max = false;
        break;
      }
    }
    if (is_max) out.insert(a);
  }
  return out;
}

// The small PL spheres used by the property tests.
inline std::vector<SimplicialComplex> corpus() {
  std::vector<SimplicialComplex> out;
  for (const char* spec : {"interval", "triangle", "square", "pentagon", "polygon:6", "octahedron",
                           "simplex:4", "simplex:5", "c47", "cyclic:4,6", "cross:4"})
    out.push_back(named_complex(spec));
  const auto p5 = polygon(5);
  auto w = wedge(p5, 0, "1#1");
  w.set_name("wed1(P5)");
  out.push_back(w);
  auto s = suspension(p5, "N", "S");
  s.set_name("susp(P5)");
  out.push_back(s);
  auto j = j_construction(p5, {2, 2, 1, 1, 1});
  j.set_name("P5(2,2,1,1,1)");
  out.push_back(j);
  auto t = join(polygon(3), polygon(4), {.rename_collisions = true});
  t.set_name("triangle*square");
  out.push_back(t);
  return out;
}

}  // namespace pls::test
