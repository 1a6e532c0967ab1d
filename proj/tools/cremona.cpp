// Command-line front end: classify, multidegree, triangulate, enumerate,
// invert, iterate, orbit and batch processing over exponent matrices.
//
// Output is a single JSON report on stdout (triangulate prints one cell
// per line unless --json is given). Errors go to stderr as JSON.
// Exit codes: 0 success, 1 user error, 2 internal error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/classification.hpp"
#include "cremona/version.hpp"

using json = nlohmann::ordered_json;
using namespace cremona;

namespace {

Int entry_cap() {
  if (const char* env = std::getenv("CREMONA_ENTRY_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

bool verbose() {
  const char* env = std::getenv("CREMONA_VERBOSE");
  return env && *env && std::string(env) != "0";
}

void check_cap(const ExponentMatrix& m) {
  Int cap = entry_cap();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (m(r, c) > cap)
        throw OverflowError("entry " + std::to_string(m(r, c)) + " exceeds cap " +
                            std::to_string(cap) + " (CREMONA_ENTRY_CAP)");
}

json matrix_json(const ExponentMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return rows;
}

json classify_json(const ExponentMatrix& m) {
  Classification cls = classify(m);
  json out;
  out["cremona"] = cls.is_cremona;
  out["family"] = family_name(cls.family);
  out["delta"] = cls.delta;
  if (cls.params) {
    const auto& p = *cls.params;
    out["params"] = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e}};
  } else {
    out["params"] = nullptr;
  }
  if (cls.delta > 0) {
    Multidegree g = multidegree(MonomialMap::from(m));
    out["multidegree"] = {g.g0, g.g1, g.g2};
  } else {
    out["multidegree"] = nullptr;
  }
  if (!cls.reason.empty()) out["reason"] = cls.reason;
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit_report(const json& input, const json& result, const Timer& timer) {
  json report;
  report["input"] = input;
  report["result"] = result;
  report["timing_ms"] = timer.ms();
  report["version"] = kVersion;
  std::cout << report.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"monomial plane Cremona map toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string matrix_text;
  Int delta = 0;
  int iterations = 1;
  bool expand_orbits = false, cross_check = false, as_json = false;
  std::string format = "json", input_path, output_path, vertex_text;

  auto add_matrix = [&](CLI::App* cmd) {
    cmd->add_option("--matrix", matrix_text, "matrix as 'a,b,c;d,e,f;g,h,i'")->required();
  };

  CLI::App* c_classify = app.add_subcommand("classify", "decide Cremona-ness and family");
  add_matrix(c_classify);

  CLI::App* c_multi = app.add_subcommand("multidegree", "multidegree, determinant, torus degree");
  add_matrix(c_multi);

  CLI::App* c_tri = app.add_subcommand("triangulate", "pulling triangulation, one cell per line");
  add_matrix(c_tri);
  c_tri->add_option("--vertex", vertex_text, "distinguished vertex '(x,y,z)' (default: lex-min)");
  c_tri->add_flag("--json", as_json, "emit a JSON report instead of plain cells");

  CLI::App* c_enum = app.add_subcommand("enumerate", "all Cremona normal forms of a degree");
  c_enum->add_option("--delta", delta, "degree (>= 2)")->required();
  c_enum->add_flag("--orbits", expand_orbits, "expand each normal form to its similarity orbit");
  c_enum->add_flag("--oracle", cross_check, "cross-check against the brute-force search");
  c_enum->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* c_inv = app.add_subcommand("invert", "exponent matrix of the inverse map");
  add_matrix(c_inv);

  CLI::App* c_iter = app.add_subcommand("iterate", "degree sequence of compositional powers");
  add_matrix(c_iter);
  c_iter->add_option("--n", iterations, "number of powers")->required()->check(CLI::PositiveNumber);

  CLI::App* c_orbit = app.add_subcommand("orbit", "orbit under simultaneous row/column permutation");
  add_matrix(c_orbit);

  CLI::App* c_batch = app.add_subcommand("batch", "classify matrices from a file, one per line");
  c_batch->add_option("--input", input_path, "input path ('#' lines are comments)")->required();
  c_batch->add_option("--output", output_path, "output path for the JSON result array")->required();
  c_batch->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << json{{"error", "cli_error"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  Timer timer;

  if (c_classify->parsed()) {
    ExponentMatrix m = ExponentMatrix::parse(matrix_text);
    check_cap(m);
    emit_report(matrix_text, classify_json(m), timer);
    return 0;
  }

  if (c_multi->parsed()) {
    ExponentMatrix m = ExponentMatrix::parse(matrix_text);
    check_cap(m);
    MonomialMap map = MonomialMap::from(m);
    Multidegree g = multidegree(map);
    Int det = determinant(map.matrix);
    json result;
    result["delta"] = map.delta;
    result["multidegree"] = {g.g0, g.g1, g.g2};
    result["det"] = det;
    result["torus_degree"] = det != 0 ? json(torus_degree(map)) : json(nullptr);
    emit_report(matrix_text, result, timer);
    return 0;
  }

  if (c_tri->parsed()) {
    ExponentMatrix m = ExponentMatrix::parse(matrix_text);
    check_cap(m);
    NewtonPolyhedron n = newton_polyhedron(MonomialMap::from(m));
    Triangulation t;
    if (vertex_text.empty()) {
      t = triangulate_default(n);
    } else {
      long long x = 0, y = 0, z = 0;
      if (std::sscanf(vertex_text.c_str(), "(%lld,%lld,%lld)", &x, &y, &z) != 3)
        throw ParseError("vertex must look like '(x,y,z)': " + vertex_text);
      t = triangulate(n, Vec3{{x, y, z}});
    }
    if (as_json) {
      json cells = json::array();
      for (const auto& cell : t.cells) cells.push_back(cell.str());
      json result;
      result["distinguished"] = t.distinguished.str();
      result["cells"] = cells;
      emit_report(matrix_text, result, timer);
    } else {
      for (const auto& cell : t.cells) std::cout << cell.str() << "\n";
    }
    return 0;
  }

  if (c_enum->parsed()) {
    std::vector<ExponentMatrix> list = enumerate_cremona(delta);
    if (cross_check && delta <= 12) {
      std::vector<ExponentMatrix> canon;
      for (const auto& m : list) canon.push_back(canonical_form_independent(m));
      std::sort(canon.begin(), canon.end());
      if (canon != brute_force_cremona(delta))
        throw std::logic_error("enumeration disagrees with brute-force oracle");
    }
    if (expand_orbits) {
      std::vector<ExponentMatrix> expanded;
      for (const auto& m : list) {
        auto orb = orbit(m);
        expanded.insert(expanded.end(), orb.begin(), orb.end());
      }
      std::sort(expanded.begin(), expanded.end());
      expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
      list = std::move(expanded);
    }
    if (format == "csv") {
      for (const auto& m : list) std::cout << m.str() << "\n";
    } else {
      json matrices = json::array();
      for (const auto& m : list) matrices.push_back(matrix_json(m));
      json result;
      result["delta"] = delta;
      result["count"] = list.size();
      result["matrices"] = matrices;
      emit_report(json{{"delta", delta}}, result, timer);
    }
    return 0;
  }

  if (c_inv->parsed()) {
    ExponentMatrix m = ExponentMatrix::parse(matrix_text);
    check_cap(m);
    MonomialMap map = MonomialMap::from(m);
    MonomialMap inv = inverse(map);
    json result;
    result["matrix"] = matrix_json(map.matrix);
    result["inverse"] = matrix_json(inv.matrix);
    result["delta"] = inv.delta;
    emit_report(matrix_text, result, timer);
    return 0;
  }

  if (c_iter->parsed()) {
    ExponentMatrix m = ExponentMatrix::parse(matrix_text);
    check_cap(m);
    MonomialMap map = MonomialMap::from(m);
    Int cap = entry_cap();
    std::vector<Int> degrees;
    ExponentMatrix power = ExponentMatrix::identity();
    for (int k = 0; k < iterations; ++k) {
      power = compose(power, map.matrix);
      if (degree(power) > cap)
        throw OverflowError("iterate: degree " + std::to_string(degree(power)) +
                            " exceeds cap " + std::to_string(cap));
      degrees.push_back(degree(power));
      if (verbose()) std::cerr << "d_" << k + 1 << " = " << degrees.back() << "\n";
    }
    json result;
    result["degrees"] = degrees;
    result["power"] = matrix_json(power);
    emit_report(matrix_text, result, timer);
    return 0;
  }

  if (c_orbit->parsed()) {
    ExponentMatrix m = ExponentMatrix::parse(matrix_text);
    check_cap(m);
    auto orb = orbit(m);
    json matrices = json::array();
    for (const auto& o : orb) matrices.push_back(matrix_json(o));
    json result;
    result["size"] = orb.size();
    result["matrices"] = matrices;
    emit_report(matrix_text, result, timer);
    return 0;
  }

  if (c_batch->parsed()) {
    std::ifstream in(input_path);
    if (!in) throw ParseError("cannot read input file: " + input_path);
    json results = json::array();
    int total = 0, cremona_count = 0, non_cremona = 0, errors = 0, lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t"));
      if (trimmed.empty() || trimmed[0] == '#') continue;
      ++total;
      json entry;
      entry["line"] = lineno;
      entry["input"] = trimmed;
      try {
        ExponentMatrix m = ExponentMatrix::parse(trimmed);
        check_cap(m);
        json cls = classify_json(m);
        bool is_cremona = cls["cremona"].get<bool>();
        (is_cremona ? cremona_count : non_cremona)++;
        entry["result"] = cls;
      } catch (const std::exception& err) {
        ++errors;
        entry["error"] = err.what();
      }
      results.push_back(entry);
      if (verbose()) std::cerr << "line " << lineno << " done\n";
    }
    std::ofstream out_file(output_path);
    if (!out_file) throw ParseError("cannot write output file: " + output_path);
    if (format == "csv") {
      for (const auto& entry : results) {
        out_file << entry["input"].get<std::string>() << ",";
        if (entry.contains("error"))
          out_file << "error\n";
        else
          out_file << (entry["result"]["cremona"].get<bool>() ? "cremona" : "not_cremona") << "\n";
      }
    } else {
      out_file << results.dump(2) << "\n";
    }
    json summary;
    summary["total"] = total;
    summary["cremona"] = cremona_count;
    summary["non_cremona"] = non_cremona;
    summary["errors"] = errors;
    emit_report(json{{"input", input_path}, {"output", output_path}}, summary, timer);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << json{{"error", "parse_error"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << json{{"error", "domain_error"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const OverflowError& e) {
    std::cerr << json{{"error", "overflow"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}
