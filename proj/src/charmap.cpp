#include "pls/charmap.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

#include "pls/error.hpp"

namespace pls {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Fraction-free elimination; nullopt when an intermediate leaves int64.
std::optional<std::int64_t> bareiss_small(std::vector<std::int64_t> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const std::int64_t pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        std::int64_t x, y, num;
        if (!__builtin_mul_overflow(a[i * n + j], pivot, &x) &&
            !__builtin_mul_overflow(a[i * n + k], a[k * n + j], &y) &&
            !__builtin_sub_overflow(x, y, &num)) {
          a[i * n + j] = prev == 1 ? num : num / prev;
          continue;
        }
        const __int128 wide = static_cast<__int128>(a[i * n + j]) * pivot -
                              static_cast<__int128>(a[i * n + k]) * a[k * n + j];
        const __int128 q = wide / prev;
        if (q > std::numeric_limits<std::int64_t>::max() ||
            q < std::numeric_limits<std::int64_t>::min())
          return std::nullopt;
        a[i * n + j] = static_cast<std::int64_t>(q);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  return sign * a[n * n - 1];
}

BigInt bareiss_big(const std::vector<std::int64_t>& src, std::size_t n) {
  if (n == 0) return 1;
  std::vector<BigInt> a(src.begin(), src.end());
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

bool is_unit_determinant(const std::vector<std::int64_t>& square, std::size_t n) {
  if (auto d = bareiss_small(square, n)) return *d == 1 || *d == -1;
  const BigInt d = bareiss_big(square, n);
  return d == 1 || d == -1;
}

// Rank of the given columns modulo a small prime equals their count.
bool independent_mod(const std::vector<const std::int64_t*>& columns, std::size_t n,
                     std::int64_t prime) {
  const std::size_t c = columns.size();
  if (c > n) return false;
  std::vector<std::int64_t> a(n * c);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i * c + j] = ((columns[j][i] % prime) + prime) % prime;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c; ++col) {
    std::size_t p = row;
    while (p < n && a[p * c + col] == 0) ++p;
    if (p == n) return false;
    for (std::size_t j = 0; j < c; ++j) std::swap(a[row * c + j], a[p * c + j]);
    // Inverse by brute force; primes here are tiny.
    std::int64_t inv = 1;
    while ((a[row * c + col] * inv) % prime != 1) ++inv;
    for (std::size_t j = 0; j < c; ++j) a[row * c + j] = (a[row * c + j] * inv) % prime;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i * c + col] == 0) continue;
      const std::int64_t f = a[i * c + col];
      for (std::size_t j = 0; j < c; ++j)
        a[i * c + j] = ((a[i * c + j] - f * a[row * c + j]) % prime + prime) % prime;
    }
    ++row;
  }
  return true;
}

bool facet_ok(const CharMatrix& lambda, const Face& facet) {
  const std::size_t n = lambda.rows();
  const auto cols = facet.to_indices();
  if (lambda.ring() == Ring::kGF2) {
    std::vector<std::vector<std::int64_t>> columns;
    std::vector<const std::int64_t*> ptrs;
    for (auto c : cols) columns.push_back(lambda.column(c));
    for (const auto& col : columns) ptrs.push_back(col.data());
    return independent_mod(ptrs, n, 2);
  }
  std::vector<std::int64_t> square(n * n);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) square[i * n + j] = lambda.at(i, cols[j]);
  return is_unit_determinant(square, n);
}

}  // namespace

const char* ring_name(Ring ring) { return ring == Ring::kGF2 ? "GF2" : "Int"; }

Ring parse_ring(const std::string& text) {
  if (text == "GF2" || text == "gf2") return Ring::kGF2;
  if (text == "Int" || text == "int") return Ring::kInt;
  throw Error(ErrorCode::kInvalidArgument, "unknown ring '" + text + "' (expected gf2 or int)");
}

CharMatrix CharMatrix::from_rows(Ring ring, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  CharMatrix out(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::kShapeMismatch, "matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto x = rows[r][c];
      if (ring == Ring::kGF2 && x != 0 && x != 1)
        throw Error(ErrorCode::kInvalidArgument, "GF2 entries must be 0 or 1");
      out.at(r, c) = x;
    }
  }
  return out;
}

std::vector<std::int64_t> CharMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<std::vector<std::int64_t>> CharMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
  return out;
}

CharMatrix CharMatrix::mod2() const {
  CharMatrix out(Ring::kGF2, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] & 1;
  return out;
}

std::string integer_determinant(const std::vector<std::int64_t>& square, std::size_t n) {
  if (square.size() != n * n) throw Error(ErrorCode::kShapeMismatch, "matrix is not square");
  if (auto d = bareiss_small(square, n)) return std::to_string(*d);
  return bareiss_big(square, n).str();
}

CharmapCheck verify_charmap(const SimplicialComplex& k, const CharMatrix& lambda,
                            unsigned threads) {
  if (lambda.cols() != k.vertex_count() || lambda.rows() != k.facet_size())
    throw Error(ErrorCode::kShapeMismatch,
                "matrix is " + std::to_string(lambda.rows()) + "x" +
                    std::to_string(lambda.cols()) + " but the complex needs " +
                    std::to_string(k.facet_size()) + "x" + std::to_string(k.vertex_count()));
  const auto& facets = k.facets();
  const std::size_t total = facets.size();
  std::atomic<std::size_t> first_bad{total};
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t f = begin; f < end && f < first_bad.load(); ++f) {
      if (!facet_ok(lambda, facets[f])) {
        std::size_t cur = first_bad.load();
        while (f < cur && !first_bad.compare_exchange_weak(cur, f)) {
        }
        return;
      }
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker, t * chunk, std::min(total, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  CharmapCheck out;
  if (first_bad.load() == total) {
    out.valid = true;
    out.reason = lambda.ring() == Ring::kInt ? "every facet minor is +-1"
                                             : "every facet minor is invertible over GF2";
    return out;
  }
  out.failing_facet = facets[first_bad.load()];
  out.reason = "facet submatrix is " +
               std::string(lambda.ring() == Ring::kInt ? "not unimodular" : "singular over GF2");
  return out;
}

namespace {

std::vector<std::vector<std::int64_t>> candidate_columns(std::size_t n, Ring ring, int bound) {
  std::vector<std::int64_t> values{0};
  if (ring == Ring::kGF2) {
    values.push_back(1);
  } else {
    for (int b = 1; b <= bound; ++b) {
      values.push_back(b);
      values.push_back(-b);
    }
  }
  const std::size_t base = values.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(base);
  if (total > static_cast<double>(1 << 24))
    throw Error(ErrorCode::kInvalidParameters, "candidate column space is too large to search");
  std::vector<std::vector<std::int64_t>> out;
  const auto count = static_cast<std::size_t>(total);
  for (std::size_t key = 1; key < count; ++key) {
    std::vector<std::int64_t> col(n);
    std::size_t rest = key;
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = values[rest % base];
      rest /= base;
      g = std::gcd(g, col[i]);
    }
    if (g == 1) out.push_back(std::move(col));
  }
  return out;
}

class CharmapSearch {
 public:
  CharmapSearch(const SimplicialComplex& k, const SearchOptions& options)
      : k_(k),
        ring_(options.ring),
        n_(k.facet_size()),
        m_(k.vertex_count()),
        candidates_(candidate_columns(k.facet_size(), options.ring, options.bound)),
        full_(m_),
        partial_(m_) {
    for (std::uint32_t f = 0; f < k.facets().size(); ++f) {
      const auto& facet = k.facets()[f];
      const auto top = facet.last();
      for (auto v : facet) (v == top ? full_ : partial_)[v].push_back(f);
    }
  }

  std::optional<CharMatrix> run(unsigned threads) {
    if (m_ == 0 || n_ == 0) return std::nullopt;
    std::atomic<std::size_t> best{candidates_.size()};
    std::vector<std::optional<std::vector<std::size_t>>> found(candidates_.size());
    auto worker = [&](unsigned t, unsigned stride) {
      std::vector<std::size_t> choice(m_);
      for (std::size_t first = t; first < candidates_.size(); first += stride) {
        if (first >= best.load()) return;
        choice[0] = first;
        if (!consistent(choice, 0)) continue;
        if (extend(choice, 1)) {
          found[first] = choice;
          std::size_t cur = best.load();
          while (first < cur && !best.compare_exchange_weak(cur, first)) {
          }
          return;
        }
      }
    };
    threads = std::max(1U, threads);
    if (threads == 1) {
      worker(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
      for (auto& th : pool) th.join();
    }
    if (best.load() == candidates_.size()) return std::nullopt;
    const auto& choice = *found[best.load()];
    CharMatrix out(ring_, n_, m_);
    for (std::size_t c = 0; c < m_; ++c)
      for (std::size_t r = 0; r < n_; ++r) out.at(r, c) = candidates_[choice[c]][r];
    return out;
  }

 private:
  bool extend(std::vector<std::size_t>& choice, std::size_t c) {
    if (c == m_) return true;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      choice[c] = i;
      if (consistent(choice, c) && extend(choice, c + 1)) return true;
    }
    return false;
  }

  bool consistent(const std::vector<std::size_t>& choice, std::size_t c) const {
    std::vector<const std::int64_t*> cols;
    for (auto f : full_[c]) {
      cols.clear();
      for (auto v : k_.facets()[f]) cols.push_back(candidates_[choice[v]].data());
      if (ring_ == Ring::kGF2) {
        if (!independent_mod(cols, n_, 2)) return false;
      } else {
        std::vector<std::int64_t> square(n_ * n_);
        for (std::size_t j = 0; j < n_; ++j)
          for (std::size_t i = 0; i < n_; ++i) square[i * n_ + j] = cols[j][i];
        if (!is_unit_determinant(square, n_)) return false;
      }
    }
    for (auto f : partial_[c]) {
      cols.clear();
      for (auto v : k_.facets()[f]) {
        if (v > c) break;
        cols.push_back(candidates_[choice[v]].data());
      }
      // A unimodular completion needs independence modulo every prime.
      if (!independent_mod(cols, n_, 2)) return false;
      if (ring_ == Ring::kInt && !independent_mod(cols, n_, 3)) return false;
    }
    return true;
  }

  const SimplicialComplex& k_;
  Ring ring_;
  std::size_t n_, m_;
  std::vector<std::vector<std::int64_t>> candidates_;
  std::vector<std::vector<std::uint32_t>> full_, partial_;
};

}  // namespace

std::optional<CharMatrix> search_charmap(const SimplicialComplex& k, const SearchOptions& options) {
  if (options.ring == Ring::kInt && options.bound < 1)
    throw Error(ErrorCode::kInvalidParameters, "entry bound must be at least 1");
  return CharmapSearch(k, options).run(options.threads);
}

std::optional<CharMatrix> find_int_certificate(const SimplicialComplex& k, unsigned threads) {
  if (auto found = search_charmap(k, {Ring::kInt, 1, threads})) return found;
  return search_charmap(k, {Ring::kInt, 2, threads});
}

namespace {

void require_valid(const SimplicialComplex& k, const CharMatrix& lambda) {
  bool ok = false;
  try {
    ok = verify_charmap(k, lambda).valid;
  } catch (const Error&) {
    ok = false;
  }
  if (!ok)
    throw Error(ErrorCode::kInvalidInputCertificate,
                "input matrix is not a characteristic matrix of the complex");
}

}  // namespace

namespace {

CharMatrix wedge_columns(const CharMatrix& lambda, std::uint32_t v) {
  const std::size_t n = lambda.rows(), m = lambda.cols();
  CharMatrix out(lambda.ring(), n + 1, m + 1);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < n; ++r) out.at(r + 1, c) = lambda.at(r, c);
  out.at(0, v) = 1;
  out.at(0, m) = 1;
  return out;
}

}  // namespace

CharMatrix wedge_propagate(const SimplicialComplex& k, const CharMatrix& lambda, std::uint32_t v) {
  require_valid(k, lambda);
  if (v >= k.vertex_count()) throw Error(ErrorCode::kNotAVertex, "vertex index out of range");
  return wedge_columns(lambda, v);
}

CharMatrix stellar_propagate(const SimplicialComplex& k, const CharMatrix& lambda,
                             const Face& sigma) {
  require_valid(k, lambda);
  if (sigma.empty() || !k.is_face(sigma))
    throw Error(ErrorCode::kNotAFace, "subdivision target is not a face");
  // A single vertex is renamed in place, so its column stays where it is.
  if (sigma.size() == 1) return lambda;
  const std::size_t n = lambda.rows(), m = lambda.cols();
  CharMatrix out(lambda.ring(), n, m + 1);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < m; ++c) out.at(r, c) = lambda.at(r, c);
    for (auto c : sigma) sum += lambda.at(r, c);
    out.at(r, m) = lambda.ring() == Ring::kGF2 ? (sum & 1) : sum;
  }
  return out;
}

CharMatrix j_propagate(const SimplicialComplex& k, const CharMatrix& lambda,
                       const MultiplicityTuple& j) {
  if (j.size() != k.vertex_count())
    throw Error(ErrorCode::kLengthMismatch, "J must have one entry per vertex");
  require_valid(k, lambda);
  // Each wedge step preserves validity, so only the input is checked.
  CharMatrix out = lambda;
  for (std::uint32_t v = 0; v < j.size(); ++v)
    for (std::uint32_t copy = 1; copy < j[v]; ++copy) out = wedge_columns(out, v);
  return out;
}

InequalityReport picard_and_inequality(const SimplicialComplex& k, bool is_seed,
                                       const CharMatrix* certificate) {
  InequalityReport r;
  r.m = static_cast<int>(k.vertex_count());
  r.n = static_cast<int>(k.facet_size());
  r.p = r.m - r.n;
  if (r.p >= 0 && r.p < 63) r.bound = (std::uint64_t{1} << r.p) - 1;
  if (certificate != nullptr) {
    try {
      r.certified = certificate->ring() == Ring::kInt && verify_charmap(k, *certificate).valid;
    } catch (const Error&) {
      r.certified = false;
    }
  }
  if (r.p < 3) {
    r.status = "outside-range";
  } else if (!is_seed) {
    r.status = "not-a-seed";
  } else if (!r.certified) {
    r.status = "uncertified";
  } else if (!r.bound || static_cast<std::uint64_t>(r.m) < *r.bound) {
    r.status = "strict";
  } else if (static_cast<std::uint64_t>(r.m) == *r.bound) {
    r.status = "tight";
  } else {
    r.status = "violated";
  }
  return r;
}

}  // namespace pls
