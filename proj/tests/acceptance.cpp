// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pls/charmap.hpp"
#include "pls/classify.hpp"
#include "pls/evidence.hpp"
#include "pls/family.hpp"
#include "pls/io.hpp"
#include "pls/operations.hpp"
#include "support.hpp"

using namespace pls;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit_seconds << " s";
    c.failures.push_back(s.str());
  }
  const bool ok = c.failures.empty();
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "PASS" : "FAIL") << " " << std::setw(2) << id << "  " << title << "  ["
            << std::fixed << std::setprecision(2) << secs << " s]";
  if (!c.note.empty()) std::cout << "  " << c.note;
  std::cout << "\n";
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i)
    std::cout << "       - " << c.failures[i] << "\n";
  if (c.failures.size() > 10) std::cout << "       - ... " << c.failures.size() - 10 << " more\n";
  std::cout.flush();
}

// Pairs of vertices meeting every facet, by direct scan.
std::size_t brute_covering_pairs(const SimplicialComplex& k) {
  std::size_t count = 0;
  for (std::uint32_t a = 0; a < k.vertex_count(); ++a)
    for (std::uint32_t b = a + 1; b < k.vertex_count(); ++b) {
      bool covers = true;
      for (const auto& f : k.facets())
        if (!f.contains(a) && !f.contains(b)) {
          covers = false;
          break;
        }
      count += covers;
    }
  return count;
}

void expect_sound(Check& c, const SimplicialComplex& k, const CharMatrix& m, const std::string& what) {
  c.expect(verify_charmap(k, m).valid, what + ": certificate does not verify");
  if (m.ring() == Ring::kInt)
    c.expect(verify_charmap(k, m.mod2()).valid, what + ": mod-2 reduction does not verify");
}

std::string describe(const FamilyMember& m) { return m.complex.name(); }

}  // namespace

int main() {
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());

  criterion(1, "base cases: pentagon, octahedron, C4(7)", 10, [](Check& c) {
    for (const char* spec : {"pentagon", "octahedron", "c47"}) {
      const auto k = named_complex(spec);
      const bool suspended_expected = std::string(spec) == "octahedron";
      c.expect(is_seed(k).value, std::string(spec) + " is not a seed");
      c.expect(is_suspended(k).value == suspended_expected,
               std::string(spec) + " has the wrong suspension flag");
      const auto cert = search_charmap(k, {.ring = Ring::kInt, .bound = 1});
      c.expect(cert && verify_charmap(k, *cert).valid,
               std::string(spec) + " has no Int certificate at bound 1");
    }
    const auto c47 = cyclic_boundary(4, 7);
    c.expect(c47.facets().size() == 14, "C4(7) does not have 14 facets");
    c.expect(f_vector(c47).counts == std::vector<std::uint64_t>{7, 21, 28, 14},
             "C4(7) f-vector is not (7,21,28,14)");
  });

  criterion(2, "tightness at p = 3", 0, [](Check& c) {
    const auto k = cyclic_boundary(4, 7);
    const auto cert = find_int_certificate(k);
    c.expect(cert.has_value(), "no certificate for C4(7)");
    if (!cert) return;
    const auto r = picard_and_inequality(k, is_seed(k).value, &*cert);
    c.expect(r.m == 7 && r.p == 3 && r.bound == 7u, "C4(7) is not m = 7 = 2^3 - 1");
    c.expect(r.certified && r.status == "tight", "C4(7) report is not a certified tight bound");
  });

  criterion(3, "corollary family p = 4", 60, [](Check& c) {
    const auto family = corollary_family(4);
    c.expect(family.size() == 10, "expected 10 members, got " + std::to_string(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& m = family[i];
      c.expect(m.n == static_cast<int>(i) + 2 && m.m == static_cast<int>(i) + 6,
               describe(m) + " has the wrong (m, n)");
      c.expect(is_seed(m.complex).value, describe(m) + " is not a seed");
      expect_sound(c, m.complex, m.certificate, describe(m));
      c.expect(m.m <= 15, describe(m) + " exceeds m = 15");
    }
    if (!family.empty()) {
      c.expect(family.back().m == 15, "top member does not reach m = 15");
      c.expect(!is_suspended(family.back().complex).value, "m = 15 member is suspended");
    }
  });

  criterion(5, "doubling construction on corpus seeds and pentagon subsets", 0, [](Check& c) {
    std::size_t cases_a = 0;
    for (const auto& k : test::corpus()) {
      if (!is_seed(k).value) continue;
      const auto susp = suspension(k, "north", "south");
      for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
        const auto& label = k.labels()[v];
        const auto w = wedge(k, v, copy_label(label, 1));
        const auto sigma =
            Face::from_indices({w.require_vertex(label), w.require_vertex(copy_label(label, 1))});
        const auto s = stellar_subdivision(w, sigma);
        const std::string what = k.name() + " at " + label;
        c.expect(are_isomorphic(s, susp).has_value(), what + ": not the suspension");
        c.expect(is_seed(s).value && is_suspended(s).value, what + ": not a suspended seed");
        ++cases_a;
      }
    }
    const auto p5 = base_member(polygon(5), {"base:pentagon"});
    std::size_t cases_b = 0;
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
      std::vector<std::uint32_t> doubled;
      for (std::uint32_t v = 0; v < 5; ++v)
        if (mask >> v & 1) doubled.push_back(v);
      if (doubled.size() < 2) continue;
      const auto m = theorem_seed(p5, doubled);
      c.expect(brute_covering_pairs(m.complex) == 0,
               "doubling mask " + std::to_string(mask) + " leaves a covering pair");
      expect_sound(c, m.complex, m.certificate, "doubling mask " + std::to_string(mask));
      ++cases_b;
    }
    c.expect(cases_b == 26, "expected 26 doubled subsets");
    c.note = std::to_string(cases_a) + " (seed, vertex) cases, " + std::to_string(cases_b) +
             " doubled subsets";
  });

  criterion(6, "remark seed J = (2,2,2,1,1)", 0, [](Check& c) {
    const auto m = remark_seed();
    c.expect(m.m == 9 && m.n == 5 && m.p == 4, "wrong (m, n, p)");
    c.expect(is_seed(m.complex).value, "not a seed");
    c.expect(!is_suspended(m.complex).value, "suspended");
    expect_sound(c, m.complex, m.certificate, "remark seed");
  });

  criterion(7, "wedge equals non-face duplication", 0, [](Check& c) {
    std::size_t cases = 0;
    for (const auto& k : test::corpus())
      for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
        const auto copy = k.labels()[v] + "'";
        c.expect(wedge(k, v, copy) == wedge_via_nonface_duplication(k, v, copy),
                 k.name() + " at " + k.labels()[v]);
        ++cases;
      }
    c.expect(cases >= 50, "only " + std::to_string(cases) + " cases");
    c.note = std::to_string(cases) + " cases";
  });

  criterion(8, "assembled faces are faces of K(J)", 0, [](Check& c) {
    std::size_t cases = 0;
    for (const auto& k : {polygon(5), crosspolytope_boundary(3)}) {
      const std::size_t m = k.vertex_count();
      for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        MultiplicityTuple j(m, 1);
        for (std::size_t v = 0; v < m; ++v) j[v] = 1 + (mask >> v & 1);
        const auto kj = j_construction(k, j);
        SelectionTuple s(m, 0);
        while (true) {
          c.expect(kj.is_face(assembled_face(k, j, s, kj)), k.name() + " mask " + std::to_string(mask));
          ++cases;
          std::size_t v = 0;
          while (v < m && s[v] + 1 == j[v]) s[v++] = 0;
          if (v == m) break;
          ++s[v];
        }
      }
    }
    c.note = std::to_string(cases) + " (J, s) cases";
  });

  criterion(9, "Picard identities", 0, [](Check& c) {
    std::size_t samples = 0;
    for (const auto& k : test::corpus()) {
      const int p = k.picard_number();
      bool copies_collide = false;
      for (const auto& l : k.labels()) copies_collide |= l.find('#') != std::string::npos;
      if (!copies_collide) {
        for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
          MultiplicityTuple j(k.vertex_count(), 1);
          j[v] = 2 + v % 2;
          c.expect(j_construction(k, j).picard_number() == p, k.name() + " K(J)");
          ++samples;
        }
      }
      for (const auto& f : k.facets()) {
        // Edges and whole facets of each facet.
        std::vector<std::uint32_t> verts(f.begin(), f.end());
        if (verts.size() < 2) continue;
        for (const Face& sigma : {Face::from_indices({verts[0], verts[1]}), f}) {
          c.expect(stellar_subdivision(k, sigma).picard_number() == p + 1, k.name() + " ss");
          ++samples;
        }
      }
    }
    c.expect(samples >= 100, "only " + std::to_string(samples) + " samples");
    c.note = std::to_string(samples) + " samples";
  });

  criterion(10, "certificate soundness and determinism", 0, [hw](Check& c) {
    std::size_t emitted = 0;
    const std::vector<unsigned> thread_counts{1, 2, std::max(3U, hw)};
    for (const auto& k : test::corpus()) {
      for (Ring ring : {Ring::kGF2, Ring::kInt}) {
        std::vector<std::string> outputs;
        for (unsigned t : thread_counts) {
          const auto cert = search_charmap(k, {.ring = ring, .bound = 1, .threads = t});
          outputs.push_back(cert ? certificate_to_json(k, *cert) : "none");
          if (cert) {
            expect_sound(c, k, *cert, k.name() + " search");
            ++emitted;
          }
        }
        c.expect(outputs[0] == outputs[1] && outputs[1] == outputs[2],
                 k.name() + ": search output differs across thread counts");
      }
      const auto cert = find_int_certificate(k);
      if (!cert) continue;
      for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
        expect_sound(c, wedge(k, v, k.labels()[v] + "'"), wedge_propagate(k, *cert, v),
                     k.name() + " wedge propagation");
        ++emitted;
      }
      for (const auto& f : k.facets()) {
        expect_sound(c, stellar_subdivision(k, f), stellar_propagate(k, *cert, f),
                     k.name() + " stellar propagation");
        ++emitted;
      }
    }
    c.note = std::to_string(emitted) + " matrices, threads 1/2/" + std::to_string(thread_counts[2]);
  });

  criterion(11, "homology sanity", 0, [](Check& c) {
    using Betti = std::vector<std::uint64_t>;
    c.expect(homology_betti(polygon(5)) == Betti{1, 1}, "P5");
    c.expect(homology_betti(crosspolytope_boundary(3)) == Betti{1, 0, 1}, "octahedron");
    c.expect(homology_betti(wedge(polygon(5), 0, "1#1")) == Betti{1, 0, 1}, "wed1(P5)");
    std::vector<std::vector<std::string>> facets;
    for (const char* prefix : {"a", "b"})
      for (int i = 0; i < 5; ++i)
        facets.push_back({prefix + std::to_string(i), prefix + std::to_string((i + 1) % 5)});
    const auto two = test::complex_of(facets);
    const auto report = sphere_evidence_report(two);
    c.expect(report.betti && report.betti->front() == 2, "two pentagons: b0 != 2");
    c.expect(report.homology == CheckState::kFailed, "two pentagons pass the sphere profile");
  });

  // Slowest last.
  criterion(4, "corollary family p = 5 with sphere evidence", 600, [hw](Check& c) {
    const auto family = corollary_family(5, {.with_evidence = true, .threads = hw});
    // m runs over 7..31, which is 25 members.
    c.expect(family.size() == 25, "expected 25 members, got " + std::to_string(family.size()));
    std::size_t full = 0, skipped = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& m = family[i];
      c.expect(m.m == static_cast<int>(i) + 7 && m.p == 5, describe(m) + " has the wrong m or p");
      c.expect(is_seed(m.complex).value, describe(m) + " is not a seed");
      expect_sound(c, m.complex, m.certificate, describe(m));
      c.expect(m.evidence.has_value(), describe(m) + " has no evidence report");
      if (!m.evidence) continue;
      const auto& e = *m.evidence;
      c.expect(e.pseudomanifold && e.strongly_connected,
               describe(m) + " is not a strongly connected pseudomanifold");
      c.expect(!e.has_failure(), describe(m) + " fails a sphere check");
      if (e.homology == CheckState::kPassed && e.euler == CheckState::kPassed) {
        ++full;
      } else {
        ++skipped;
        c.expect(!e.reasons.empty(), describe(m) + " skipped a check without a reason");
      }
    }
    if (!family.empty()) {
      c.expect(family.back().m == 31, "top member does not reach m = 31");
      c.expect(!is_suspended(family.back().complex).value, "m = 31 member is suspended");
    }
    c.note = std::to_string(family.size()) + " members (m = 7..31), " + std::to_string(full) +
             " with full homology, " + std::to_string(skipped) + " over budget with reasons";
  });

  return failed_criteria == 0 ? 0 : 1;
}
