// Command-line front end. Talks to the library only through pls.h.
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pls/pls.h"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string code;
  std::string message;
};

void check(pls_status status) {
  if (status != PLS_OK) throw Failure{pls_status_name(status), pls_last_error()};
}

struct ComplexDeleter {
  void operator()(pls_complex* k) const { pls_complex_free(k); }
};
struct CharmapDeleter {
  void operator()(pls_charmap* c) const { pls_charmap_free(c); }
};
struct FamilyDeleter {
  void operator()(pls_family* f) const { pls_family_free(f); }
};
using Complex = std::unique_ptr<pls_complex, ComplexDeleter>;
using Charmap = std::unique_ptr<pls_charmap, CharmapDeleter>;
using Family = std::unique_ptr<pls_family, FamilyDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s);
  pls_string_free(s);
  return out;
}

template <class F>
std::string text_of(F&& call) {
  char* out = nullptr;
  check(call(&out));
  return take(out);
}

template <class F>
json json_of(F&& call) {
  return json::parse(text_of(std::forward<F>(call)));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"IoError", "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{"IoError", "cannot write " + path.string()};
}

std::string sha256(const std::string& text) {
  return text_of([&](char** o) { return pls_sha256(text.data(), text.size(), o); });
}

Complex load_complex(const std::string& path) {
  pls_complex* k = nullptr;
  check(pls_complex_parse(read_text(path).c_str(), &k));
  return Complex(k);
}

Charmap load_certificate(const std::string& path, const pls_complex* k) {
  pls_charmap* c = nullptr;
  check(pls_charmap_parse(read_text(path).c_str(), k, &c));
  return Charmap(c);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PLS_FACE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Failure{"InvalidArgument", std::string("PLS_FACE_BUDGET is not a number: ") + env};
    }
  }
  return 10'000'000;
}

void print(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- build

Complex apply_op(const pls_complex* k, const std::string& op) {
  const auto colon = op.find(':');
  const std::string name = op.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : op.substr(colon + 1);
  pls_complex* out = nullptr;
  if (name == "wedge") {
    const auto comma = arg.find(',');
    const std::string v = arg.substr(0, comma);
    const std::string copy = comma == std::string::npos ? "" : arg.substr(comma + 1);
    check(pls_wedge(k, v.c_str(), copy.empty() ? nullptr : copy.c_str(), &out));
  } else if (name == "ss") {
    check(pls_stellar_subdivision(k, arg.c_str(), nullptr, &out));
  } else if (name == "susp") {
    const auto comma = arg.find(',');
    if (arg.empty()) {
      check(pls_suspension(k, nullptr, nullptr, &out));
    } else if (comma == std::string::npos) {
      throw Failure{"InvalidArgument", "expected susp or susp:NORTH,SOUTH"};
    } else {
      const auto north = arg.substr(0, comma), south = arg.substr(comma + 1);
      check(pls_suspension(k, north.c_str(), south.c_str(), &out));
    }
  } else if (name == "link") {
    check(pls_link(k, arg.c_str(), &out));
  } else if (name == "star") {
    check(pls_star(k, arg.c_str(), &out));
  } else if (name == "join") {
    pls_complex* other = nullptr;
    check(pls_complex_named(arg.c_str(), &other));
    Complex guard(other);
    check(pls_join(k, other, 1, &out));
  } else if (name == "j") {
    std::vector<std::uint32_t> j;
    std::stringstream s(arg);
    for (std::string item; std::getline(s, item, ',');) {
      try {
        j.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      } catch (const std::exception&) {
        throw Failure{"InvalidArgument", "bad multiplicity '" + item + "' in " + op};
      }
    }
    check(pls_j_construction(k, j.data(), j.size(), &out));
  } else {
    throw Failure{"InvalidArgument", "unknown operation '" + op + "'"};
  }
  Complex result(out);
  check(pls_complex_append_trace(result.get(), op.c_str()));
  return result;
}

int run_build(const std::string& base, const std::string& input, const std::vector<std::string>& ops,
              const std::string& name, const std::string& output) {
  pls_complex* start = nullptr;
  std::string derived;
  if (!base.empty()) {
    check(pls_complex_named(base.c_str(), &start));
    derived = base;
  } else if (!input.empty()) {
    const auto text = read_text(input);
    check(pls_complex_parse(text.c_str(), &start));
    derived = json::parse(text).value("name", "");
  } else {
    throw Failure{"InvalidArgument", "build needs --base or --input"};
  }
  Complex k(start);
  for (const auto& op : ops) {
    k = apply_op(k.get(), op);
    derived += "+" + op;
  }
  // Without --name the result is named after its pipeline.
  const auto& final_name = name.empty() ? derived : name;
  check(pls_complex_set_name(k.get(), final_name.c_str()));
  const auto text = text_of([&](char** o) { return pls_complex_to_json(k.get(), o); });
  if (!output.empty()) write_text(output, text);
  std::cout << text;
  std::cerr << "built complex: m=" << pls_complex_vertex_count(k.get())
            << " facets=" << pls_complex_facet_count(k.get())
            << " dim=" << pls_complex_dimension(k.get()) << "\n";
  return kExitOk;
}

// ---- verify

int run_verify(const std::string& path, const std::string& cert_path, bool inequality,
               std::uint64_t budget) {
  auto k = load_complex(path);
  json doc;
  doc["complex"] = {{"name", json::parse(read_text(path))["name"]},
                    {"hash", text_of([&](char** o) { return pls_complex_hash(k.get(), o); })},
                    {"m", pls_complex_vertex_count(k.get())},
                    {"n", pls_complex_dimension(k.get()) + 1}};
  const auto cls = json_of([&](char** o) { return pls_classify_json(k.get(), o); });
  doc["seed"] = cls["seed"]["value"];
  doc["suspended"] = cls["suspended"]["value"];
  doc["classification"] = cls;
  const auto evidence = json_of([&](char** o) { return pls_evidence_json(k.get(), budget, o); });
  doc["evidence"] = evidence;
  bool ok = evidence["ok"].get<bool>();

  Charmap cert;
  if (!cert_path.empty()) {
    cert = load_certificate(cert_path, k.get());
    const auto v = json_of([&](char** o) { return pls_charmap_verify_json(k.get(), cert.get(), 1, o); });
    doc["certificate"] = v;
    ok = ok && v["valid"].get<bool>();
  }
  if (inequality && !cert && doc["seed"].get<bool>()) {
    // No certificate given: look for one so the bound can still be certified.
    pls_charmap* found = nullptr;
    check(pls_charmap_search(k.get(), PLS_RING_INT, 0, 1, &found));
    cert = Charmap(found);
    doc["certificate"] = {{"searched", true}, {"found", found != nullptr}};
  }
  if (inequality) {
    const auto r = json_of([&](char** o) { return pls_inequality_json(k.get(), cert.get(), o); });
    doc["inequality"] = r;
    ok = ok && r["status"] != "violated";
  }
  doc["ok"] = ok;
  print(doc);
  std::cerr << "seed: " << doc["seed"] << ", suspended: " << doc["suspended"]
            << ", evidence: " << (evidence["ok"].get<bool>() ? "ok" : "FAILED");
  if (doc.contains("inequality")) std::cerr << ", inequality: " << doc["inequality"]["status"].get<std::string>();
  std::cerr << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

// ---- charmap

pls_ring ring_from(const std::string& text) {
  if (text == "gf2" || text == "GF2") return PLS_RING_GF2;
  if (text == "int" || text == "Int") return PLS_RING_INT;
  throw Failure{"InvalidArgument", "ring must be gf2 or int"};
}

int run_charmap(const std::string& path, const std::string& ring, int bound, unsigned threads,
                const std::string& verify_path, const std::string& output) {
  auto k = load_complex(path);
  if (!verify_path.empty()) {
    // Loading re-verifies; a bad certificate surfaces as an error object.
    auto cert = load_certificate(verify_path, k.get());
    auto v = json_of([&](char** o) { return pls_charmap_verify_json(k.get(), cert.get(), threads, o); });
    print(v);
    std::cerr << "certificate " << (v["valid"].get<bool>() ? "verifies" : "does NOT verify") << "\n";
    return v["valid"].get<bool>() ? kExitOk : kExitCheckFailed;
  }
  pls_charmap* found = nullptr;
  check(pls_charmap_search(k.get(), ring_from(ring), bound, threads, &found));
  if (found == nullptr) {
    print(json{{"found", false}, {"ring", ring}, {"bound", bound}});
    std::cerr << "no characteristic matrix in the searched range\n";
    return kExitCheckFailed;
  }
  Charmap cert(found);
  const auto text = text_of([&](char** o) { return pls_charmap_to_json(cert.get(), k.get(), o); });
  if (!output.empty()) write_text(output, text);
  std::cout << text;
  std::cerr << "found a characteristic matrix\n";
  return kExitOk;
}

// ---- decompose / iso

int run_decompose(const std::string& path) {
  auto k = load_complex(path);
  const auto doc = json_of([&](char** o) { return pls_decompose_json(k.get(), o); });
  print(doc);
  std::cerr << "J = " << doc["J"].dump() << ", round trip "
            << (doc["round_trip"].get<bool>() ? "ok" : "FAILED") << "\n";
  return doc["round_trip"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int run_iso(const std::string& a_path, const std::string& b_path) {
  auto a = load_complex(a_path);
  auto b = load_complex(b_path);
  const auto doc = json_of([&](char** o) { return pls_isomorphism_json(a.get(), b.get(), o); });
  print(doc);
  std::cerr << (doc["isomorphic"].get<bool>() ? "isomorphic" : "not isomorphic") << "\n";
  return doc["isomorphic"].get<bool>() ? kExitOk : kExitCheckFailed;
}

// ---- family / remark

bool member_ok(const json& m) {
  bool ok = m["seed"].get<bool>() && m["certificate_valid"].get<bool>() &&
            m["certificate_mod2_valid"].get<bool>();
  if (!m["evidence"].is_null()) ok = ok && m["evidence"]["ok"].get<bool>();
  return ok && m["inequality"]["status"] != "violated";
}

// Writes member files when `dir` is set; returns the manifest entry.
json emit_member(const pls_family* f, std::size_t i, const std::string& dir) {
  const auto report = json_of([&](char** o) { return pls_family_member_json(f, i, o); });
  const auto* k = pls_family_complex(f, i);
  const auto* c = pls_family_certificate(f, i);
  const auto name = report["name"].get<std::string>();
  json entry;
  entry["name"] = name;
  entry["m"] = report["m"];
  entry["n"] = report["n"];
  entry["p"] = report["p"];
  entry["seed"] = report["seed"];
  entry["non_suspended"] = report["non_suspended"];
  entry["inequality"] = report["inequality"]["status"];
  entry["verified"] = member_ok(report);
  if (!dir.empty()) {
    const auto complex_text = text_of([&](char** o) { return pls_complex_to_json(k, o); });
    const auto cert_text = text_of([&](char** o) { return pls_charmap_to_json(c, k, o); });
    const auto report_text = report.dump(2) + "\n";
    json files;
    for (const auto& [suffix, text] : {std::pair<std::string, const std::string&>{".json", complex_text},
                                       {".cert.json", cert_text},
                                       {".report.json", report_text}}) {
      const auto file = name + suffix;
      write_text(fs::path(dir) / file, text);
      files.push_back({{"file", file}, {"sha256", sha256(text)}});
    }
    entry["files"] = files;
  }
  return entry;
}

int emit_family(const pls_family* f, const json& header, const std::string& dir) {
  if (!dir.empty()) fs::create_directories(dir);
  json manifest = header;
  manifest["count"] = pls_family_size(f);
  json members = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < pls_family_size(f); ++i) {
    members.push_back(emit_member(f, i, dir));
    ok = ok && members.back()["verified"].get<bool>();
  }
  manifest["members"] = members;
  manifest["ok"] = ok;
  if (!dir.empty()) write_text(fs::path(dir) / "manifest.json", manifest.dump(2) + "\n");
  print(manifest);
  std::cerr << pls_family_size(f) << " member(s), " << (ok ? "all verified" : "VERIFICATION FAILED")
            << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int run_family(int p, bool evidence, unsigned threads, std::uint64_t budget, const std::string& dir) {
  pls_family* f = nullptr;
  check(pls_family_generate(p, evidence ? 1 : 0, budget, threads, &f));
  Family family(f);
  return emit_family(family.get(), json{{"p", p}, {"evidence", evidence}}, dir);
}

int run_remark(bool evidence, std::uint64_t budget, const std::string& dir) {
  pls_family* f = nullptr;
  check(pls_family_remark(evidence ? 1 : 0, budget, &f));
  Family family(f);
  return emit_family(family.get(), json{{"construction", "remark"}, {"evidence", evidence}}, dir);
}

int run_theorem(const std::string& path, const std::string& cert_path, const std::string& doubled,
                const std::string& dir) {
  auto k = load_complex(path);
  Charmap cert;
  if (!cert_path.empty()) cert = load_certificate(cert_path, k.get());
  pls_family* f = nullptr;
  check(pls_family_theorem_seed(k.get(), cert.get(), doubled.c_str(), &f));
  Family family(f);
  return emit_family(family.get(), json{{"construction", "theorem"}, {"doubled", doubled}}, dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeds, wedges and characteristic maps on PL spheres"};
  app.require_subcommand(1);
  std::uint64_t budget = 0;
  app.add_option("--budget", budget, "Face budget for f-vector and homology (env PLS_FACE_BUDGET)");

  std::string base, input, name, output;
  std::vector<std::string> ops;
  auto* build = app.add_subcommand("build", "Build a complex from a named base and an operation pipeline");
  build->add_option("--base", base, "pentagon, octahedron, c47, polygon:K, cross:N, cyclic:D,M, simplex:K");
  build->add_option("--input", input, "Start from a complex file instead");
  build->add_option("--op", ops,
                    "wedge:v[,copy]  ss:a,b,..  susp[:N,S]  link:a,..  star:a,..  join:SPEC  j:2,1,..");
  build->add_option("--name", name, "Name of the result");
  build->add_option("-o,--output", output, "Also write the complex file here");

  std::string file, cert_path;
  bool inequality = false;
  auto* verify = app.add_subcommand("verify", "Classify a complex and collect sphere evidence");
  verify->add_option("complex", file)->required();
  verify->add_option("--charmap", cert_path, "Certificate file to check");
  verify->add_flag("--seed-inequality", inequality, "Report m <= 2^p - 1");

  std::string ring = "int", verify_cert;
  int bound = 0;
  unsigned threads = 1;
  auto* charmap = app.add_subcommand("charmap", "Search or verify a characteristic matrix");
  charmap->add_option("complex", file)->required();
  charmap->add_option("--ring", ring, "gf2 or int")->check(CLI::IsMember({"gf2", "int", "GF2", "Int"}));
  charmap->add_option("--bound", bound, "Entry bound for int (0: try 1, then 2)");
  charmap->add_option("--threads", threads);
  charmap->add_option("--verify", verify_cert, "Verify this certificate instead of searching");
  charmap->add_option("-o,--output", output, "Also write the certificate file here");

  auto* decompose = app.add_subcommand("decompose", "Seed decomposition with round-trip check");
  decompose->add_option("complex", file)->required();

  std::string other;
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", file)->required();
  iso->add_option("b", other)->required();

  int p = 0;
  bool evidence = false;
  std::string out_dir;
  auto* family = app.add_subcommand("family", "Seeds of Picard number p reaching m = 2^p - 1");
  family->add_option("--p", p)->required();
  family->add_flag("--evidence", evidence, "Attach sphere evidence reports");
  family->add_option("--threads", threads);
  family->add_option("--out", out_dir, "Write member files and manifest.json here");

  auto* remark = app.add_subcommand("remark", "The J = (2,2,2,1,1) pentagon seed");
  remark->add_flag("--evidence", evidence);
  remark->add_option("--out", out_dir);

  std::string doubled;
  auto* theorem = app.add_subcommand("theorem", "Double vertices of a seed and subdivide");
  theorem->add_option("complex", file)->required();
  theorem->add_option("--double", doubled, "Comma-separated labels")->required();
  theorem->add_option("--charmap", cert_path, "Certificate of the input (searched if absent)");
  theorem->add_option("--out", out_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::uint64_t face_budget = budget ? budget : default_budget();
    if (*build) return run_build(base, input, ops, name, output);
    if (*verify) return run_verify(file, cert_path, inequality, face_budget);
    if (*charmap) return run_charmap(file, ring, bound, threads, verify_cert, output);
    if (*decompose) return run_decompose(file);
    if (*iso) return run_iso(file, other);
    if (*family) return run_family(p, evidence, threads, face_budget, out_dir);
    if (*remark) return run_remark(evidence, face_budget, out_dir);
    if (*theorem) return run_theorem(file, cert_path, doubled, out_dir);
  } catch (const Failure& f) {
    print(json{{"error", {{"code", f.code}, {"message", f.message}}}});
    std::cerr << "error: " << f.code << ": " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    print(json{{"error", {{"code", "InternalError"}, {"message", e.what()}}}});
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
