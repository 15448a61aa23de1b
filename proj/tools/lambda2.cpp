#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lambda2/census.hpp"
#include "lambda2/graph6.hpp"
#include "lambda2/grs.hpp"
#include "lambda2/smith.hpp"
#include "lambda2/spectral.hpp"

using namespace lambda2;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::vector<std::string> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

ordered_json enclosure_json(const RootEnclosure& enc, const Rational& width) {
  RootEnclosure fine = refine_enclosure(enc, width);
  ordered_json j;
  j["approx"] = fine.approx();
  j["interval"] = {fine.lo.get_str(), fine.hi.get_str()};
  j["poly"] = to_coeff_string(fine.source);
  if (auto tag = symbolic_tag(fine))
    j["tag"] = *tag;
  else
    j["tag"] = nullptr;
  return j;
}

int cmd_spectrum(const std::string& g6, double tol) {
  Graph g = graph6_decode(g6);
  ordered_json j;
  j["schema"] = 1;
  j["graph6"] = graph6_encode(g);
  j["n"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["charpoly"] = to_coeff_string(charpoly(g));
  j["eigenvalues"] = eigenvalues_approx(g, tol);

  // exact multiplicities for catalog constants present in the spectrum
  ordered_json exact = ordered_json::array();
  std::vector<BoundConstant> catalog;
  for (const char* name : {"two", "sqrt3", "two_sqrt2", "golden_conj", "sqrt2_minus_1", "one", "one_third"})
    catalog.push_back(named_bound(name));
  for (int k = -g.vertex_count(); k <= g.vertex_count(); ++k) {
    if (k == 1 || k == 2) continue;
    catalog.push_back(from_rational(Rational(k)));
  }
  for (const BoundConstant& c : catalog) {
    SpectralPosition sp = spectral_position(g, c);
    if (sp.multiplicity >= 1) exact.push_back({{"value", c.text}, {"multiplicity", sp.multiplicity}});
  }
  j["exact_multiplicities"] = exact;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_charpoly(const std::string& g6) {
  std::cout << to_coeff_string(charpoly(graph6_decode(g6))) << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& g6, const std::string& bound_text, bool with_oracle) {
  Graph g = graph6_decode(g6);
  BoundConstant a = parse_bound(bound_text);
  ordered_json j;
  j["schema"] = 1;
  j["graph6"] = graph6_encode(g);
  j["n"] = g.vertex_count();
  j["bound"] = a.text;

  ordered_json verts = ordered_json::array();
  std::string overall = "not_applicable";
  bool connected = is_connected(g);
  std::vector<int> cuts =
      connected && g.vertex_count() >= 3 ? articulation_points(g) : std::vector<int>{};
  if (!connected) {
    j["note"] = "graph is not connected";
  } else if (!cuts.empty()) {
    std::string first_determined;
    for (int u : cuts) {
      Profile p = component_profile(g, u, a);
      Classification c = grs_decide(p);
      ordered_json vj;
      vj["vertex"] = u;
      ordered_json rels = ordered_json::array();
      for (Rel r : p.relations) rels.push_back(to_string(r));
      vj["relations"] = rels;
      vj["big_second"] = p.big_second ? ordered_json(to_string(*p.big_second)) : ordered_json(nullptr);
      vj["classification"] = to_string(c);
      verts.push_back(vj);
      if (c != Classification::inconclusive && first_determined.empty())
        first_determined = to_string(c);
    }
    overall = first_determined.empty() ? "inconclusive" : first_determined;
  }
  j["cut_vertices"] = verts;
  j["classification"] = overall;

  int exit_code = kExitOk;
  if (with_oracle && g.vertex_count() >= 2) {
    Rel oracle = compare_eigenvalue(g, 2, a);
    j["oracle"] = to_string(oracle);
    bool determined =
        overall == "less_than" || overall == "equal" || overall == "greater_than";
    bool agree = !determined || to_string(oracle) == (overall == "less_than"   ? "less"
                                                      : overall == "equal"     ? "equal"
                                                                               : "greater");
    j["agree"] = agree;
    if (!agree) exit_code = kExitInternal;
  }
  std::cout << j.dump(2) << "\n";
  return exit_code;
}

int cmd_bounds(const std::string& g6, double width) {
  Graph g = graph6_decode(g6);
  Rational w(width);
  ordered_json j;
  j["schema"] = 1;
  j["graph6"] = graph6_encode(g);
  try {
    Bounds b = best_bounds(g);
    if (b.kind == Bounds::Kind::exactly_alpha1) {
      j["kind"] = "exact";
      j["value"] = enclosure_json(b.lower, w);
    } else {
      j["kind"] = "open";
      j["lower"] = enclosure_json(b.lower, w);
      j["upper"] = enclosure_json(b.upper, w);
    }
  } catch (const NotApplicable&) {
    std::cerr << "error: graph has no cut-vertex\n";
    return kExitInput;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_census(int max_n, const std::string& file, const std::string& bound_text, int workers,
               bool emit_records, bool timing, const std::string& csv_path) {
  BoundConstant a = parse_bound(bound_text);
  CensusOptions opt;
  opt.workers = workers;
  opt.emit_records = emit_records || !csv_path.empty();
  opt.timing = timing;
  CensusReport rep = file.empty() ? census_builtin(max_n, a, opt)
                                  : census_graphs(read_graph6_file(file), a, opt);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::invalid_argument("cannot write " + csv_path);
    out << records_csv(rep);
    if (!emit_records) {
      rep.records.clear();
      rep.records_emitted = false;
    }
  }
  std::cout << report_json(rep);
  return rep.contradictions == 0 ? kExitOk : kExitInternal;
}

int cmd_find_inconclusive(const std::string& bound_text, int max_n) {
  BoundConstant a = parse_bound(bound_text);
  WitnessSearch ws = find_inconclusive(a, max_n);
  std::cout << witnesses_json(ws, a, max_n);
  return kExitOk;
}

int cmd_smith_list(int max_n, bool dot) {
  for (const SmithForm& f : smith_forms_up_to(max_n)) {
    Graph g = build(f);
    if (dot)
      std::cout << "# " << form_name(f) << "\n" << dot_export(g);
    else
      std::cout << form_name(f) << "\t" << graph6_encode(g) << "\n";
  }
  return kExitOk;
}

int cmd_smith_check(const std::string& g6) {
  Graph g = graph6_decode(g6);
  ordered_json j;
  j["schema"] = 1;
  j["graph6"] = graph6_encode(g);
  if (!is_connected(g)) {
    std::cerr << "error: graph is not connected\n";
    return kExitInput;
  }
  auto form = recognize_smith(g);
  j["smith_form"] = form ? ordered_json(form_name(*form)) : ordered_json(nullptr);
  j["index_vs_2"] = to_string(index_vs_2(g));
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params, bool dot) {
  Graph g = [&] {
    if (family == "smith") {
      if (params.size() != 1) throw std::invalid_argument("generate smith: need a form name");
      const std::string& which = params[0];
      for (const SmithForm& f : smith_forms_up_to(64)) {
        if (form_name(f) == which) return build(f);
      }
      if (which == "e6") return spider_graph(2, 2, 2);
      if (which == "e7") return spider_graph(1, 3, 3);
      if (which == "e8") return spider_graph(1, 2, 5);
      throw std::invalid_argument("generate smith: unknown form " + which);
    }
    if (family == "join") {
      // each part is <graph6>:<comma separated attachment vertices>
      std::vector<JoinPart> parts;
      for (const std::string& spec : params) {
        auto colon = spec.rfind(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("generate join: part must be <graph6>:<v,v,...>");
        JoinPart part;
        part.graph = graph6_decode(spec.substr(0, colon));
        std::string list = spec.substr(colon + 1);
        size_t pos = 0;
        while (pos < list.size()) {
          auto comma = list.find(',', pos);
          if (comma == std::string::npos) comma = list.size();
          part.attach.push_back(std::stoi(list.substr(pos, comma - pos)));
          pos = comma + 1;
        }
        parts.push_back(std::move(part));
      }
      return join_at_new_vertex(parts);
    }
    std::vector<long> nums;
    for (const std::string& p : params) nums.push_back(std::stol(p));
    return generate_family(family, nums);
  }();
  std::cout << (dot ? dot_export(g) : graph6_encode(g) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact second-eigenvalue analysis for graphs with a cut-vertex"};
  app.require_subcommand(1);

  std::string g6, bound = "2", file, csv_path, family;
  std::vector<std::string> params;
  double tol = 1e-10, width = 1e-9;
  int max_n = 6, workers = 1;
  bool with_oracle = false, emit_records = false, timing = false, dot = false;

  auto* spectrum = app.add_subcommand("spectrum", "charpoly, eigenvalues and exact multiplicities");
  spectrum->add_option("graph6", g6)->required();
  spectrum->add_option("--tol", tol, "absolute eigenvalue tolerance");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial coefficients");
  charpoly_cmd->add_option("graph6", g6)->required();

  auto* classify_cmd = app.add_subcommand("classify", "second eigenvalue vs a bound");
  classify_cmd->add_option("graph6", g6)->required();
  classify_cmd->add_option("--bound", bound, "bound constant");
  classify_cmd->add_flag("--oracle", with_oracle, "cross-check with the exact oracle");

  auto* bounds_cmd = app.add_subcommand("bounds", "certified second-eigenvalue enclosure");
  bounds_cmd->add_option("graph6", g6)->required();
  bounds_cmd->add_option("--width", width, "enclosure refinement width");

  auto* census_cmd = app.add_subcommand("census", "classify an enumeration or corpus");
  auto* maxn_opt = census_cmd->add_option("--max-n", max_n, "builtin enumeration limit (<= 7)");
  auto* file_opt = census_cmd->add_option("--file", file, "graph6 corpus, one per line");
  maxn_opt->excludes(file_opt);
  census_cmd->add_option("--bound", bound, "bound constant");
  census_cmd->add_option("--workers", workers, "worker threads");
  census_cmd->add_flag("--emit-records", emit_records, "embed per-graph records in the report");
  census_cmd->add_flag("--timing", timing, "measure wall and per-graph time (non-deterministic)");
  census_cmd->add_option("--csv", csv_path, "write per-graph records as CSV");

  auto* find_cmd = app.add_subcommand("find-inconclusive", "witnesses for the undecided profile");
  find_cmd->add_option("--bound", bound, "bound constant");
  find_cmd->add_option("--max-n", max_n, "enumeration limit");

  auto* smith_cmd = app.add_subcommand("smith", "index-2 catalog tools");
  smith_cmd->require_subcommand(1);
  auto* smith_list = smith_cmd->add_subcommand("list", "print catalog members");
  smith_list->add_option("--max-n", max_n, "largest member size");
  smith_list->add_flag("--dot", dot, "emit DOT instead of graph6");
  auto* smith_check = smith_cmd->add_subcommand("check", "recognize and classify a graph");
  smith_check->add_option("graph6", g6)->required();

  auto* generate_cmd = app.add_subcommand("generate", "emit a named family member");
  generate_cmd->add_option("family", family, "path|cycle|star|complete|spider|double_broom|smith|join")
      ->required();
  generate_cmd->add_option("params", params, "family parameters");
  generate_cmd->add_flag("--dot", dot, "emit DOT instead of graph6");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spectrum) return cmd_spectrum(g6, tol);
    if (*charpoly_cmd) return cmd_charpoly(g6);
    if (*classify_cmd) return cmd_classify(g6, bound, with_oracle);
    if (*bounds_cmd) return cmd_bounds(g6, width);
    if (*census_cmd) {
      if (file.empty() && !*maxn_opt) {
        std::cerr << "error: census needs --max-n or --file\n";
        return kExitInput;
      }
      return cmd_census(max_n, file, bound, workers, emit_records, timing, csv_path);
    }
    if (*find_cmd) return cmd_find_inconclusive(bound, max_n);
    if (*smith_list) return cmd_smith_list(max_n, dot);
    if (*smith_check) return cmd_smith_check(g6);
    if (*generate_cmd) return cmd_generate(family, params, dot);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
