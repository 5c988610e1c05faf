#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pls/complex.hpp"

namespace pls {

struct PseudomanifoldFlags {
  /// Every ridge lies in exactly two facets.
  bool pseudomanifold = false;
  /// The ridge-adjacency graph of facets is connected.
  bool strongly_connected = false;
  std::string reason;
};

PseudomanifoldFlags pseudomanifold_and_connectivity(const SimplicialComplex& k);

/// Sparse integer column: (row, coefficient) sorted by row.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Boundary matrix from `faces` (dimension d, sorted) to `lower` (dimension
/// d-1, sorted), oriented by increasing vertex order.
std::vector<SparseColumn> boundary_matrix(const std::vector<Face>& faces,
                                          const std::vector<Face>& lower);

/// Exact rank over the rationals.
std::size_t rational_rank(std::vector<SparseColumn> columns);

/// Unreduced Betti numbers b_0, ..., b_{n-1} over the rationals. Raises
/// BudgetExceeded when the complex has more faces than the budget.
std::vector<std::uint64_t> homology_betti(const SimplicialComplex& k,
                                          std::uint64_t face_budget = kDefaultFaceBudget);

enum class CheckState { kPassed, kFailed, kSkipped };
const char* check_state_name(CheckState s);

struct EvidenceReport {
  bool pure = true;
  bool pseudomanifold = false;
  bool strongly_connected = false;
  CheckState euler = CheckState::kSkipped;
  CheckState homology = CheckState::kSkipped;
  FVector f_vector;
  std::optional<std::vector<std::uint64_t>> betti;
  /// One entry per failed or skipped check.
  std::vector<std::string> reasons;

  bool has_failure() const {
    return !pure || !pseudomanifold || !strongly_connected || euler == CheckState::kFailed ||
           homology == CheckState::kFailed;
  }
};

/// Expected sphere profile for an (n-1)-dimensional complex: Betti numbers
/// (1, 0, ..., 0, 1), or (2) for n = 1.
std::vector<std::uint64_t> sphere_betti_profile(std::size_t n);

EvidenceReport sphere_evidence_report(const SimplicialComplex& k,
                                      std::uint64_t face_budget = kDefaultFaceBudget);

}  // namespace pls
