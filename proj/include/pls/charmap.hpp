#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pls/complex.hpp"
#include "pls/operations.hpp"

namespace pls {

enum class Ring { kGF2, kInt };

const char* ring_name(Ring ring);
/// Accepts "GF2"/"gf2" and "Int"/"int"; raises InvalidArgument otherwise.
Ring parse_ring(const std::string& text);

/// n x m characteristic matrix, one column per vertex in label-table order.
class CharMatrix {
 public:
  CharMatrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  /// Rows of equal length; raises ShapeMismatch on ragged input and
  /// InvalidArgument on GF2 entries outside {0,1}.
  static CharMatrix from_rows(Ring ring, const std::vector<std::vector<std::int64_t>>& rows);

  Ring ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::int64_t& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::vector<std::int64_t> column(std::size_t c) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  /// Entries reduced into {0,1}, ring GF2.
  CharMatrix mod2() const;

  bool operator==(const CharMatrix&) const = default;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<std::int64_t> entries_;
};

/// Exact determinant of a square integer matrix given row-major, as decimal text.
std::string integer_determinant(const std::vector<std::int64_t>& square, std::size_t n);

struct CharmapCheck {
  bool valid = false;
  /// Lowest-index facet whose submatrix is not unimodular (Int) / invertible (GF2).
  std::optional<Face> failing_facet;
  std::string reason;
};

/// Raises ShapeMismatch when the matrix is not (dim+1) x m.
CharmapCheck verify_charmap(const SimplicialComplex& k, const CharMatrix& lambda,
                            unsigned threads = 1);

struct SearchOptions {
  Ring ring = Ring::kInt;
  /// Entries range over [-bound, bound] (ignored for GF2).
  int bound = 1;
  unsigned threads = 1;
};

/// Lexicographically first characteristic matrix, or nullopt after an
/// exhaustive search. Columns are filled in vertex order. Candidate columns
/// are ordered by the key sum_i rank(x_i) * base^i, where rank orders entries
/// 0, 1, -1, 2, -2, ... (GF2: 0, 1) and base is the number of entry values.
std::optional<CharMatrix> search_charmap(const SimplicialComplex& k, const SearchOptions& options);

/// Int search at bound 1, then once more at bound 2.
std::optional<CharMatrix> find_int_certificate(const SimplicialComplex& k, unsigned threads = 1);

/// Certificate for wedge(K, v, copy): a new first row with 1 in columns v and
/// copy; column copy = (1, 0, ..., 0), column v = (1, lambda_v), others (0, lambda_u).
/// The copy column is appended last, matching wedge().
CharMatrix wedge_propagate(const SimplicialComplex& k, const CharMatrix& lambda, std::uint32_t v);

/// Certificate for stellar_subdivision(K, sigma): appends sum_{i in sigma} lambda_i.
CharMatrix stellar_propagate(const SimplicialComplex& k, const CharMatrix& lambda,
                             const Face& sigma);

/// Iterated wedge_propagate in the order used by j_construction.
CharMatrix j_propagate(const SimplicialComplex& k, const CharMatrix& lambda,
                       const MultiplicityTuple& j);

struct InequalityReport {
  int m = 0;
  int n = 0;
  int p = 0;
  /// 2^p - 1 when p < 63.
  std::optional<std::uint64_t> bound;
  bool certified = false;
  /// "tight", "strict", "violated", "outside-range", "not-a-seed", "uncertified"
  std::string status;
};

/// Picard number and the toric colorable seed inequality m <= 2^p - 1.
InequalityReport picard_and_inequality(const SimplicialComplex& k, bool is_seed,
                                       const CharMatrix* certificate);

}  // namespace pls
