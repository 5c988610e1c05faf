#include "pls/family.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "pls/classify.hpp"
#include "pls/error.hpp"
#include "pls/operations.hpp"

namespace pls {

namespace {

std::vector<std::string> numbered_labels(std::size_t m) {
  std::vector<std::string> out;
  out.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string comma_joined(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

std::string fresh_label(const SimplicialComplex& k, std::string label) {
  while (k.index_of(label)) label += "~";
  return label;
}

void fill_flags(FamilyMember& member) {
  const auto& k = member.complex;
  member.m = static_cast<int>(k.vertex_count());
  member.n = static_cast<int>(k.facet_size());
  member.p = member.m - member.n;
  member.seed = is_seed(k).value;
  member.non_suspended = !is_suspended(k).value;
  member.inequality = picard_and_inequality(k, member.seed, &member.certificate);
}

void name_member(FamilyMember& member) {
  member.complex.set_name("p" + std::to_string(member.p) + "-n" + std::to_string(member.n) +
                          "-m" + std::to_string(member.m));
}

}  // namespace

SimplicialComplex polygon(std::size_t k) {
  if (k < 3) throw Error(ErrorCode::kTooSmall, "a polygon needs at least 3 vertices");
  if (k > kMaxVertices) throw Error(ErrorCode::kTooManyVertices, "polygon too large");
  std::vector<Face> facets;
  for (std::uint32_t i = 0; i < k; ++i) {
    Face f;
    f.insert(i);
    f.insert(static_cast<std::uint32_t>((i + 1) % k));
    facets.push_back(f);
  }
  return SimplicialComplex::from_parts(numbered_labels(k), std::move(facets),
                                       "polygon-" + std::to_string(k));
}

SimplicialComplex crosspolytope_boundary(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameters, "crosspolytope dimension must be >= 1");
  if (2 * n > kMaxVertices) throw Error(ErrorCode::kTooManyVertices, "crosspolytope too large");
  std::vector<Face> facets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Face f;
    for (std::uint32_t i = 0; i < n; ++i)
      f.insert(((mask >> i) & 1U) ? static_cast<std::uint32_t>(i + n) : i);
    facets.push_back(f);
  }
  return SimplicialComplex::from_parts(numbered_labels(2 * n), std::move(facets),
                                       "crosspolytope-" + std::to_string(n));
}

SimplicialComplex cyclic_boundary(std::size_t d, std::size_t m) {
  if (d < 2 || m < d + 1 || m > kMaxVertices)
    throw Error(ErrorCode::kInvalidParameters, "cyclic polytope needs d >= 2 and m >= d+1");
  std::vector<Face> facets;
  // Enumerate d-subsets in lexicographic order.
  std::vector<std::uint32_t> s(d);
  for (std::uint32_t i = 0; i < d; ++i) s[i] = i;
  while (true) {
    Face f;
    for (auto x : s) f.insert(x);
    bool even = true;
    for (std::uint32_t i = 0; i < m && even; ++i) {
      if (f.contains(i)) continue;
      for (std::uint32_t j = i + 1; j < m; ++j) {
        if (f.contains(j)) continue;
        std::size_t between = 0;
        for (auto x : s)
          if (x > i && x < j) ++between;
        if (between % 2 == 1) {
          even = false;
          break;
        }
      }
    }
    if (even) facets.push_back(f);
    std::size_t pos = d;
    while (pos > 0 && s[pos - 1] == m - d + pos - 1) --pos;
    if (pos == 0) break;
    ++s[pos - 1];
    for (std::size_t i = pos; i < d; ++i) s[i] = s[i - 1] + 1;
  }
  return SimplicialComplex::from_parts(numbered_labels(m), std::move(facets),
                                       "cyclic-" + std::to_string(d) + "-" + std::to_string(m));
}

SimplicialComplex named_complex(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto number = [&](const std::string& text) -> std::size_t {
    try {
      std::size_t used = 0;
      const auto value = std::stoul(text, &used);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kInvalidParameters, "bad number '" + text + "' in '" + spec + "'");
  };
  SimplicialComplex out = [&] {
    if (kind == "pentagon" && arg.empty()) return polygon(5);
    if (kind == "triangle" && arg.empty()) return polygon(3);
    if (kind == "square" && arg.empty()) return polygon(4);
    if (kind == "octahedron" && arg.empty()) return crosspolytope_boundary(3);
    if (kind == "interval" && arg.empty()) return crosspolytope_boundary(1);
    if (kind == "c47" && arg.empty()) return cyclic_boundary(4, 7);
    if (kind == "polygon") return polygon(number(arg));
    if (kind == "cross") return crosspolytope_boundary(number(arg));
    if (kind == "simplex") {
      const auto k = number(arg);
      if (k < 2) throw Error(ErrorCode::kTooSmall, "simplex boundary needs at least 2 vertices");
      return boundary_of_simplex(numbered_labels(k));
    }
    if (kind == "cyclic") {
      const auto comma = arg.find(',');
      if (comma == std::string::npos)
        throw Error(ErrorCode::kInvalidParameters, "expected cyclic:d,m");
      return cyclic_boundary(number(arg.substr(0, comma)), number(arg.substr(comma + 1)));
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown base complex '" + spec + "'");
  }();
  out.set_name(spec);
  return out;
}

FamilyMember base_member(SimplicialComplex k, std::vector<std::string> trace) {
  auto certificate = find_int_certificate(k);
  if (!certificate)
    throw Error(ErrorCode::kInvalidInputCertificate,
                "no integer characteristic matrix with entries in [-2, 2] for " + k.name());
  FamilyMember member;
  member.complex = std::move(k);
  member.trace = std::move(trace);
  member.certificate = std::move(*certificate);
  fill_flags(member);
  return member;
}

FamilyMember member_with_certificate(SimplicialComplex k, CharMatrix certificate,
                                     std::vector<std::string> trace) {
  if (auto check = verify_charmap(k, certificate); !check.valid)
    throw Error(ErrorCode::kInvalidInputCertificate, "certificate does not verify: " + check.reason);
  FamilyMember member;
  member.complex = std::move(k);
  member.trace = std::move(trace);
  member.certificate = std::move(certificate);
  fill_flags(member);
  return member;
}

FamilyMember theorem_seed(const FamilyMember& base, const std::vector<std::uint32_t>& doubled) {
  const auto& k = base.complex;
  if (auto seed = is_seed(k); !seed.value)
    throw Error(ErrorCode::kNotASeed, k.name() + " is not a seed: " + seed.reason);
  if (!verify_charmap(k, base.certificate).valid)
    throw Error(ErrorCode::kInvalidInputCertificate, "base certificate does not verify");
  if (doubled.empty()) throw Error(ErrorCode::kInvalidArgument, "no vertex to double");
  MultiplicityTuple j(k.vertex_count(), 1);
  for (auto v : doubled) {
    if (v >= k.vertex_count()) throw Error(ErrorCode::kNotAVertex, "doubled vertex out of range");
    if (j[v] == 2) throw Error(ErrorCode::kInvalidArgument, "vertex doubled twice");
    j[v] = 2;
  }
  if (doubled.size() > 1) {
    if (auto susp = is_suspended(k); susp.value)
      throw Error(ErrorCode::kHypothesisViolated,
                  k.name() + " is suspended (" + susp.reason +
                      "); doubling several vertices needs a non-suspended seed");
  }

  const auto kj = j_construction(k, j);
  const auto lambda_j = j_propagate(k, base.certificate, j);
  Face sigma;
  if (doubled.size() == 1) {
    const auto& v = k.labels()[doubled.front()];
    sigma.insert(kj.require_vertex(v));
    sigma.insert(kj.require_vertex(copy_label(v, 1)));
  } else {
    sigma = assembled_face(k, j, SelectionTuple(k.vertex_count(), 0), kj);
  }
  auto subdivided = stellar_subdivision(kj, sigma);
  auto lambda = stellar_propagate(kj, lambda_j, sigma);
  if (!verify_charmap(subdivided, lambda).valid)
    throw Error(ErrorCode::kInternal, "propagated certificate does not verify");

  FamilyMember member;
  member.trace = base.trace;
  for (std::uint32_t v = 0; v < j.size(); ++v)
    if (j[v] == 2) member.trace.push_back("wedge:" + k.labels()[v]);
  member.trace.push_back("ss:" + comma_joined(kj.labels_of(sigma)));
  member.trace.push_back("relabel");
  member.complex = SimplicialComplex::from_parts(numbered_labels(subdivided.vertex_count()),
                                                 subdivided.facets());
  member.certificate = std::move(lambda);
  fill_flags(member);
  name_member(member);

  if (doubled.size() == 1) {
    const auto susp = suspension(k, fresh_label(k, "north"), fresh_label(k, "south"));
    if (!are_isomorphic(member.complex, susp))
      throw Error(ErrorCode::kTheoremContradiction,
                  "subdivided wedge is not isomorphic to the suspension of " + k.name());
    if (!member.seed || member.non_suspended)
      throw Error(ErrorCode::kTheoremContradiction,
                  "expected a suspended seed from " + k.name());
  } else if (!member.seed || !member.non_suspended) {
    throw Error(ErrorCode::kTheoremContradiction,
                "expected a non-suspended seed from " + k.name());
  }
  return member;
}

FamilyMember remark_seed() {
  auto pentagon = base_member(polygon(5), {"base:pentagon"});
  auto member = theorem_seed(pentagon, {0, 1, 2});
  member.complex.set_name("remark-p4-n5-m9");
  return member;
}

void attach_evidence(FamilyMember& member, std::uint64_t face_budget) {
  member.evidence = sphere_evidence_report(member.complex, face_budget);
}

namespace {

void check_level(const std::vector<FamilyMember>& level, int p) {
  const std::uint64_t bound = (std::uint64_t{1} << p) - 1;
  for (const auto& member : level) {
    const auto& name = member.complex.name();
    if (member.p != p || member.m != member.n + p)
      throw Error(ErrorCode::kTheoremContradiction, name + " has the wrong Picard number");
    if (!member.seed) throw Error(ErrorCode::kTheoremContradiction, name + " is not a seed");
    if (!verify_charmap(member.complex, member.certificate).valid)
      throw Error(ErrorCode::kTheoremContradiction, name + " certificate does not verify");
    if (static_cast<std::uint64_t>(member.m) > bound)
      throw Error(ErrorCode::kTheoremContradiction, name + " violates m <= 2^p - 1");
  }
  const auto& top = level.back();
  if (static_cast<std::uint64_t>(top.m) != bound || !top.non_suspended)
    throw Error(ErrorCode::kTheoremContradiction,
                "top member of level p=" + std::to_string(p) + " is not a non-suspended m = 2^p-1 seed");
}

}  // namespace

std::vector<FamilyMember> corollary_family(int p, const FamilyOptions& options) {
  if (p < kMinFamilyP || p > kMaxFamilyP)
    throw Error(ErrorCode::kUnsupportedP, "supported Picard numbers are " +
                                              std::to_string(kMinFamilyP) + ".." +
                                              std::to_string(kMaxFamilyP));
  // level[i] has n = i + 2.
  std::vector<FamilyMember> level;
  level.push_back(base_member(polygon(5), {"base:pentagon"}));
  level.push_back(base_member(crosspolytope_boundary(3), {"base:octahedron"}));
  level.push_back(base_member(cyclic_boundary(4, 7), {"base:c47"}));
  for (auto& member : level) name_member(member);
  check_level(level, 3);

  for (int target = 4; target <= p; ++target) {
    const int prev = target - 1;
    std::vector<FamilyMember> next;
    next.push_back(base_member(polygon(static_cast<std::size_t>(target + 2)),
                               {"base:polygon:" + std::to_string(target + 2)}));
    // Suspension step for 3 <= n <= 2^prev - prev.
    const int last_suspended_n = (1 << prev) - prev;
    for (int n = 3; n <= last_suspended_n; ++n)
      next.push_back(theorem_seed(level[static_cast<std::size_t>(n - 3)], {0}));
    // L_k from the non-suspended top member for k = 2 .. 2^prev - 1.
    const auto& top = level.back();
    for (std::uint32_t kk = 2; kk <= static_cast<std::uint32_t>((1 << prev) - 1); ++kk) {
      std::vector<std::uint32_t> doubled(kk);
      for (std::uint32_t i = 0; i < kk; ++i) doubled[i] = i;
      next.push_back(theorem_seed(top, doubled));
    }
    for (auto& member : next) name_member(member);
    check_level(next, target);
    level = std::move(next);
  }

  if (options.with_evidence) {
    const unsigned threads = std::max(1U, options.threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < level.size(); i += threads)
            attach_evidence(level[i], options.face_budget);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return level;
}

}  // namespace pls
