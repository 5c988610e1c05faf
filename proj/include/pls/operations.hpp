#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pls/complex.hpp"

namespace pls {

/// One positive multiplicity per vertex, aligned with the base label table.
using MultiplicityTuple = std::vector<std::uint32_t>;
/// One copy index per vertex, 0 <= s[v] < J[v].
using SelectionTuple = std::vector<std::uint32_t>;

/// Label of the k-th wedge copy of `base` (k >= 1): "v#k". Copy 0 is `base`.
std::string copy_label(const std::string& base, std::uint32_t k);

/// Default label of the vertex created by subdividing `sigma`: "w{a+b+...}".
std::string subdivision_label(const SimplicialComplex& k, const Face& sigma);

/// (K minus the open star of sigma) union (v_sigma * boundary(sigma) * link(sigma)).
/// The new vertex is appended to the label table. For a single vertex the
/// result is K with that vertex renamed in place.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma,
                                      const std::string& new_label);
SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma);

/// I * lk(v) union dI * {faces avoiding v}, with I the edge {v, copy}. The copy
/// is appended to the label table.
SimplicialComplex wedge(const SimplicialComplex& k, std::uint32_t v, const std::string& copy);

/// The same complex, computed from minimal non-faces: v is duplicated into
/// {v, copy} inside every minimal non-face containing v.
SimplicialComplex wedge_via_nonface_duplication(const SimplicialComplex& k, std::uint32_t v,
                                                const std::string& copy);

/// dI * K with dI on {north, south}, the two new labels appended.
SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north,
                             const std::string& south);

/// K(J). Wedges are applied in increasing vertex order; copies of v are
/// labeled v#1, ..., v#(J[v]-1) and appended in that order after the base labels.
SimplicialComplex j_construction(const SimplicialComplex& k, const MultiplicityTuple& j);

/// [m]^(s) minus {v : J[v] = 1}, as a face of j_construction(K, J).
Face assembled_face(const SimplicialComplex& k, const MultiplicityTuple& j,
                    const SelectionTuple& s);

/// Same, checked for membership in a given K(J).
Face assembled_face(const SimplicialComplex& k, const MultiplicityTuple& j,
                    const SelectionTuple& s, const SimplicialComplex& kj);

}  // namespace pls
