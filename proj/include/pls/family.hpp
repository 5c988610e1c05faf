#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pls/charmap.hpp"
#include "pls/complex.hpp"
#include "pls/evidence.hpp"

namespace pls {

/// Cycle on vertices "1".."k".
SimplicialComplex polygon(std::size_t k);
/// Join of n copies of dI; vertices "1".."2n" with antipodal pairs {i, i+n}.
SimplicialComplex crosspolytope_boundary(std::size_t n);
/// Boundary of the cyclic d-polytope on "1".."m" via Gale's evenness condition.
SimplicialComplex cyclic_boundary(std::size_t d, std::size_t m);

/// Named base complexes: pentagon, triangle, square, octahedron, interval,
/// c47, polygon:K, cross:N, simplex:K (boundary of the simplex on K
/// vertices), cyclic:D,M. The result is named after `spec`.
SimplicialComplex named_complex(const std::string& spec);

struct FamilyMember {
  SimplicialComplex complex;
  int m = 0;
  int n = 0;
  int p = 0;
  /// Operation sequence from a named base complex.
  std::vector<std::string> trace;
  CharMatrix certificate{Ring::kInt, 0, 0};
  /// Recomputed by brute force on the final complex.
  bool seed = false;
  bool non_suspended = false;
  /// Polytopal because the base is and wedges/subdivisions preserve it;
  /// recorded, not checked.
  bool polytopal_by_construction = true;
  InequalityReport inequality;
  std::optional<EvidenceReport> evidence;
};

/// Wraps a named base complex: searches an Int certificate (bound 1, then 2)
/// and classifies it. Raises InvalidInputCertificate if none is found.
FamilyMember base_member(SimplicialComplex k, std::vector<std::string> trace);

/// Wraps a complex with a caller-supplied certificate. Raises
/// InvalidInputCertificate if it does not verify.
FamilyMember member_with_certificate(SimplicialComplex k, CharMatrix certificate,
                                     std::vector<std::string> trace);

/// Doubles `doubled` (indices into base.complex), then subdivides the
/// assembled face (or the wedged edge {v, v#1} when one vertex is doubled).
/// The result carries the propagated certificate and brute-force flags, and
/// is relabeled "1".."m" in label-table order. Raises NotASeed,
/// HypothesisViolated, InvalidInputCertificate, TheoremContradiction.
FamilyMember theorem_seed(const FamilyMember& base, const std::vector<std::uint32_t>& doubled);

/// The Picard-number-4 non-suspended seed from the pentagon with J = (2,2,2,1,1).
FamilyMember remark_seed();

struct FamilyOptions {
  bool with_evidence = false;
  std::uint64_t face_budget = kDefaultFaceBudget;
  unsigned threads = 1;
};

inline constexpr int kMinFamilyP = 3;
inline constexpr int kMaxFamilyP = 5;

/// Seeds of Picard number p for n = 2 .. 2^p - p - 1 (m = p + 2 .. 2^p - 1),
/// built level by level from the p = 3 base cases. Raises UnsupportedP.
std::vector<FamilyMember> corollary_family(int p, const FamilyOptions& options = {});

/// Attaches a sphere evidence report.
void attach_evidence(FamilyMember& member, std::uint64_t face_budget);

}  // namespace pls
