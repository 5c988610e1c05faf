#include "pls/evidence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "pls/error.hpp"

namespace pls {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PseudomanifoldFlags pseudomanifold_and_connectivity(const SimplicialComplex& k) {
  PseudomanifoldFlags out;
  const auto& facets = k.facets();
  if (k.facet_size() == 0) {
    out.reason = "the complex {∅} has no ridges";
    return out;
  }
  struct RidgeUse {
    std::uint32_t count = 0;
    std::uint32_t first = 0;
  };
  std::unordered_map<Face, RidgeUse, VertexSetHash> ridges;
  ridges.reserve(facets.size() * k.facet_size());
  UnionFind components(facets.size());
  for (std::uint32_t f = 0; f < facets.size(); ++f) {
    for (auto v : facets[f]) {
      Face r = facets[f];
      r.erase(v);
      auto& use = ridges[r];
      if (use.count++ == 0)
        use.first = f;
      else
        components.unite(use.first, f);
    }
  }
  out.pseudomanifold = true;
  for (const auto& [ridge, use] : ridges) {
    if (use.count != 2) {
      out.pseudomanifold = false;
      out.reason = "ridge " + [&] {
        std::string s = "{";
        bool first = true;
        for (const auto& l : k.labels_of(ridge)) {
          s += (first ? "" : ",") + l;
          first = false;
        }
        return s + "}";
      }() + " lies in " + std::to_string(use.count) + " facet(s)";
      break;
    }
  }
  const auto root = components.find(0);
  out.strongly_connected = true;
  for (std::size_t f = 1; f < facets.size(); ++f) {
    if (components.find(f) != root) {
      out.strongly_connected = false;
      if (!out.reason.empty()) out.reason += "; ";
      out.reason += "facet adjacency graph is disconnected";
      break;
    }
  }
  return out;
}

std::vector<SparseColumn> boundary_matrix(const std::vector<Face>& faces,
                                          const std::vector<Face>& lower) {
  std::vector<SparseColumn> out;
  out.reserve(faces.size());
  for (const auto& f : faces) {
    SparseColumn col;
    std::int64_t sign = 1;
    for (auto v : f) {
      Face g = f;
      g.erase(v);
      auto it = std::lower_bound(lower.begin(), lower.end(), g);
      if (it == lower.end() || *it != g)
        throw Error(ErrorCode::kInternal, "boundary face missing from the lower level");
      col.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign);
      sign = -sign;
    }
    std::sort(col.begin(), col.end());
    out.push_back(std::move(col));
  }
  return out;
}

namespace {

std::int64_t checked(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::kBudgetExceeded, "coefficient overflow in exact rank computation");
  return static_cast<std::int64_t>(x);
}

// col <- a*col - b*pivot, then divided by the content; both sorted by row.
SparseColumn combine(const SparseColumn& col, std::int64_t a, const SparseColumn& pivot,
                     std::int64_t b) {
  SparseColumn out;
  out.reserve(col.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < pivot.size()) {
    __int128 value;
    std::uint32_t row;
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      row = col[i].first;
      value = static_cast<__int128>(a) * col[i].second;
      ++i;
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      row = pivot[j].first;
      value = -static_cast<__int128>(b) * pivot[j].second;
      ++j;
    } else {
      row = col[i].first;
      value = static_cast<__int128>(a) * col[i].second - static_cast<__int128>(b) * pivot[j].second;
      ++i;
      ++j;
    }
    if (value != 0) out.emplace_back(row, checked(value));
  }
  std::int64_t g = 0;
  for (const auto& [row, x] : out) g = std::gcd(g, x);
  if (g > 1)
    for (auto& e : out) e.second /= g;
  return out;
}

// Reduces columns in place; returns the pivot rows of nonzero reduced columns.
std::vector<std::uint32_t> reduce(std::vector<SparseColumn>& columns, std::size_t row_count) {
  std::vector<std::int64_t> pivot_of(row_count, -1);
  std::vector<std::uint32_t> pivots;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      const auto low = col.back().first;
      const auto p = pivot_of[low];
      if (p < 0) {
        pivot_of[low] = static_cast<std::int64_t>(c);
        pivots.push_back(low);
        break;
      }
      const auto& pivot = columns[static_cast<std::size_t>(p)];
      const std::int64_t a = pivot.back().second;
      const std::int64_t b = col.back().second;
      const std::int64_t g = std::gcd(a, b);
      col = combine(col, a / g, pivot, b / g);
    }
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(std::vector<SparseColumn> columns) {
  std::size_t rows = 0;
  for (const auto& c : columns)
    if (!c.empty()) rows = std::max<std::size_t>(rows, c.back().first + 1);
  return reduce(columns, rows).size();
}

std::vector<std::uint64_t> homology_betti(const SimplicialComplex& k, std::uint64_t face_budget) {
  auto levels = faces_by_dimension(k, face_budget);
  if (!levels)
    throw Error(ErrorCode::kBudgetExceeded,
                "more than " + std::to_string(face_budget) + " faces; homology not computed");
  const std::size_t n = levels->size();
  if (n == 0) return {};
  std::uint64_t total = 0;
  for (const auto& l : *levels) total += l.size();

  // rank[d] = rank of the boundary map from dimension d to d-1 (rank[0] = 0).
  std::vector<std::size_t> rank(n + 1, 0);
  // Clearing: a face that is the pivot of a reduced higher column is a
  // boundary, so its own column reduces to zero.
  std::vector<bool> cleared;
  for (std::size_t d = n - 1; d >= 1; --d) {
    const auto& faces = (*levels)[d];
    const auto& lower = (*levels)[d - 1];
    auto full = boundary_matrix(faces, lower);
    if (total <= 100'000 && d + 1 < n) {
      // The composite boundary of every (d+1)-face vanishes.
      auto upper = boundary_matrix((*levels)[d + 1], faces);
      for (const auto& col : upper) {
        std::unordered_map<std::uint32_t, std::int64_t> acc;
        for (const auto& [row, x] : col)
          for (const auto& [r2, y] : full[row]) acc[r2] += x * y;
        for (const auto& [r2, v] : acc)
          if (v != 0) throw Error(ErrorCode::kInternal, "boundary of a boundary is nonzero");
      }
    }
    std::vector<SparseColumn> active;
    active.reserve(faces.size());
    for (std::size_t c = 0; c < faces.size(); ++c)
      if (cleared.empty() || !cleared[c]) active.push_back(std::move(full[c]));
    const auto pivots = reduce(active, lower.size());
    rank[d] = pivots.size();
    cleared.assign(lower.size(), false);
    for (auto r : pivots) cleared[r] = true;
  }
  std::vector<std::uint64_t> betti(n);
  for (std::size_t d = 0; d < n; ++d)
    betti[d] = (*levels)[d].size() - rank[d] - rank[d + 1];
  return betti;
}

const char* check_state_name(CheckState s) {
  switch (s) {
    case CheckState::kPassed: return "passed";
    case CheckState::kFailed: return "failed";
    case CheckState::kSkipped: return "skipped";
  }
  return "unknown";
}

std::vector<std::uint64_t> sphere_betti_profile(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {2};
  std::vector<std::uint64_t> out(n, 0);
  out.front() = 1;
  out.back() = 1;
  return out;
}

EvidenceReport sphere_evidence_report(const SimplicialComplex& k, std::uint64_t face_budget) {
  EvidenceReport r;
  const std::size_t n = k.facet_size();
  // Stored complexes are pure by construction.
  r.pure = true;
  auto pm = pseudomanifold_and_connectivity(k);
  r.pseudomanifold = pm.pseudomanifold;
  r.strongly_connected = pm.strongly_connected;
  if (!pm.reason.empty()) r.reasons.push_back(pm.reason);

  r.f_vector = f_vector(k, face_budget);
  if (r.f_vector.euler_characteristic) {
    const std::int64_t expected = (n % 2 == 1) ? 2 : 0;  // 1 + (-1)^(n-1)
    if (*r.f_vector.euler_characteristic == expected) {
      r.euler = CheckState::kPassed;
    } else {
      r.euler = CheckState::kFailed;
      r.reasons.push_back("Euler characteristic " +
                          std::to_string(*r.f_vector.euler_characteristic) + ", expected " +
                          std::to_string(expected));
    }
  } else {
    r.euler = CheckState::kSkipped;
    r.reasons.push_back("Euler characteristic skipped: more than " +
                        std::to_string(face_budget) + " faces");
  }

  if (!r.f_vector.complete) {
    r.homology = CheckState::kSkipped;
    r.reasons.push_back("homology skipped: more than " + std::to_string(face_budget) + " faces");
    return r;
  }
  try {
    r.betti = homology_betti(k, face_budget);
    if (*r.betti == sphere_betti_profile(n)) {
      r.homology = CheckState::kPassed;
    } else {
      r.homology = CheckState::kFailed;
      std::string b;
      for (auto x : *r.betti) b += (b.empty() ? "" : ",") + std::to_string(x);
      r.reasons.push_back("Betti numbers (" + b + ") do not match the sphere profile");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    r.homology = CheckState::kSkipped;
    r.reasons.push_back(std::string("homology skipped: ") + e.what());
  }
  return r;
}

}  // namespace pls
