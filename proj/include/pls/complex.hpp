#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pls/vertex_set.hpp"

namespace pls {

/// Pure simplicial complex stored by its facets.
///
/// Invariants (enforced by every factory):
///   - labels are nonempty, pairwise distinct, free of whitespace and commas;
///   - every label occurs in some facet (no ghost vertices);
///   - facets are pairwise incomparable, of equal cardinality, sorted
///     lexicographically, without duplicates.
///
/// The complex {∅} (no vertices, one empty facet) is representable and has
/// dimension -1. The void complex (no faces at all) is not.
class SimplicialComplex {
 public:
  /// Normalizes raw facets given as label lists. Labels are numbered in
  /// first-appearance order; duplicate facets are merged.
  static SimplicialComplex from_label_facets(
      const std::vector<std::vector<std::string>>& raw_facets, std::string name = {});

  /// Normalizes facets over an existing label table. Labels that occur in no
  /// facet are dropped (the remaining ones keep their relative order).
  static SimplicialComplex from_parts(std::vector<std::string> labels,
                                      std::vector<Face> facets, std::string name = {});

  /// The complex {∅}.
  static SimplicialComplex empty_complex(std::string name = {});

  /// The complex {∅}.
  SimplicialComplex() : facets_{Face{}} {}

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Face>& facets() const { return facets_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// m
  std::size_t vertex_count() const { return labels_.size(); }
  /// n = cardinality of a facet
  std::size_t facet_size() const { return facet_size_; }
  /// n - 1
  int dimension() const { return static_cast<int>(facet_size_) - 1; }
  /// m - n
  int picard_number() const {
    return static_cast<int>(labels_.size()) - static_cast<int>(facet_size_);
  }

  std::optional<std::uint32_t> index_of(std::string_view label) const;
  /// Throws NotAVertex.
  std::uint32_t require_vertex(std::string_view label) const;
  /// Throws NotAVertex.
  Face face_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Face& face) const;
  VertexSet vertex_set() const { return VertexSet::prefix(labels_.size()); }

  bool is_face(const Face& face) const;

  /// Exact equality of label tables and facet lists (names ignored).
  bool operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && facets_ == other.facets_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
  std::size_t facet_size_ = 0;
};

/// Throws InvalidLabel unless the text is a valid vertex label.
void check_label(std::string_view label);

/// True when both complexes have the same facets as sets of labels,
/// regardless of label-table order.
bool same_labeled(const SimplicialComplex& a, const SimplicialComplex& b);

/// Rebuilds `k` over a label table listing the same labels in another order.
SimplicialComplex reorder_labels(const SimplicialComplex& k,
                                 const std::vector<std::string>& order);

SimplicialComplex link(const SimplicialComplex& k, const Face& sigma);
SimplicialComplex star(const SimplicialComplex& k, const Face& sigma);

struct JoinOptions {
  /// Rename colliding labels of the right operand by appending '~' instead
  /// of raising LabelCollision.
  bool rename_collisions = false;
};
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       JoinOptions options = {});

/// All proper subsets of the simplex on `labels`; {∅} for a single label.
SimplicialComplex boundary_of_simplex(const std::vector<std::string>& labels);
/// Boundary of a face of `k`, with labels taken from `k`.
SimplicialComplex boundary_of_simplex(const SimplicialComplex& k, const Face& sigma);

/// Inclusion-minimal non-faces, sorted lexicographically. Cost grows with
/// the number of faces.
std::vector<Face> minimal_non_faces(const SimplicialComplex& k);

/// The complex on `labels` whose faces are the subsets containing no member
/// of `non_faces`. Raises NotPure if that complex is not pure.
SimplicialComplex complex_from_minimal_non_faces(const std::vector<std::string>& labels,
                                                 const std::vector<Face>& non_faces);

inline constexpr std::uint64_t kDefaultFaceBudget = 10'000'000;

struct FVector {
  /// counts[i] = number of i-dimensional faces.
  std::vector<std::uint64_t> counts;
  /// False when the face budget was exceeded; then only f0, f1, f2 are filled.
  bool complete = true;
  std::optional<std::int64_t> euler_characteristic;
};

FVector f_vector(const SimplicialComplex& k, std::uint64_t face_budget = kDefaultFaceBudget);

/// Nonempty faces grouped by dimension, each group sorted; nullopt when the
/// total exceeds the budget.
std::optional<std::vector<std::vector<Face>>> faces_by_dimension(
    const SimplicialComplex& k, std::uint64_t face_budget = kDefaultFaceBudget);

/// Vertex bijection (index in `k` -> index in `l`) carrying facets onto
/// facets; the lexicographically least one when several exist.
std::optional<std::vector<std::uint32_t>> are_isomorphic(const SimplicialComplex& k,
                                                         const SimplicialComplex& l);

}  // namespace pls
