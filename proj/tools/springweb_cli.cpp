// springweb: command line front end for the library.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "springweb/classify.hpp"
#include "springweb/diagrams.hpp"
#include "springweb/error.hpp"
#include "springweb/geometry.hpp"
#include "springweb/json_io.hpp"
#include "springweb/qseries.hpp"
#include "springweb/render.hpp"
#include "springweb/tableaux.hpp"
#include "springweb/verify.hpp"
#include "springweb/webs.hpp"

using namespace springweb;

namespace {

struct TableauArgs {
  std::string col2;
  std::optional<int> n;
};

void add_tableau_options(CLI::App* cmd, TableauArgs& args, const std::string& name = "--col2") {
  cmd->add_option(name, args.col2, "second column entries, e.g. 3,4,6,8,10")->required();
  cmd->add_option("--n", args.n, "number of boxes (default 2k)");
}

TwoColumnTableau read_tableau(const TableauArgs& args) {
  auto col2 = parse_label_list(args.col2);
  const int k = static_cast<int>(col2.size());
  if (k == 0) throw InvalidInput("--col2 must list at least one entry");
  return TwoColumnTableau(TwoColumnShape(args.n.value_or(2 * k), k), std::move(col2));
}

FanApex read_apex(const std::string& s) {
  if (s == "least") return FanApex::LeastLabel;
  if (s == "successor") return FanApex::SuccessorOfLeast;
  throw InvalidInput("--apex must be least or successor");
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-column Springer fiber components, webs and matching diagrams"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  TableauArgs tab;
  std::string apex = "least";

  auto* syt = app.add_subcommand("syt", "show a tableau, or list all tableaux of a shape");
  syt->add_option("--col2", tab.col2, "second column entries");
  syt->add_option("--n", tab.n, "number of boxes (default 2k)");
  std::optional<int> list_k;
  syt->add_option("--k", list_k, "with --n, list every tableau of shape (n-k, k)*");

  auto* matching = app.add_subcommand("matching", "noncrossing matching or matching-and-ray diagram");
  add_tableau_options(matching, tab);

  auto* web = app.add_subcommand("web", "hourglass web of a rectangular tableau");
  add_tableau_options(web, tab);
  web->add_option("--apex", apex, "triangulation fan apex: least or successor");

  auto* classify = app.add_subcommand("classify", "smoothness verdicts with witnesses (JSON)");
  add_tableau_options(classify, tab);

  auto* geometry = app.add_subcommand("geometry", "iterated fiber bundle base (JSON)");
  add_tableau_options(geometry, tab);
  std::string via = "triple";
  geometry->add_option("--via", via, "web, triple or diagram")->check(CLI::IsMember({"web", "triple", "diagram"}));

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a smooth component");
  add_tableau_options(poincare, tab);

  auto* orbit = app.add_subcommand("orbit", "compare two forest webs by polynomial and dihedral orbit");
  add_tableau_options(orbit, tab);
  std::string other;
  orbit->add_option("--other", other, "second column of the other tableau")->required();

  auto* count = app.add_subcommand("count", "count smooth components of (k,k)*");
  int count_k = 0;
  count->add_option("--k", count_k, "rectangle height")->required()->check(CLI::Range(1, 10));
  bool avoiders = false;
  count->add_flag("--avoiders", avoiders, "also count {321, 2143, 3124}-avoiding permutations");

  auto* verify = app.add_subcommand("verify", "exhaustive cross-checks (JSON report)");
  int max_k = 6;
  std::string suite = "all";
  bool timing = false;
  verify->add_option("--max-k", max_k, "largest rectangle height")->check(CLI::Range(2, 8));
  verify->add_option("--suite", suite, "all, smooth, geometry, poincare, promotion or counts")
      ->check(CLI::IsMember({"all", "smooth", "geometry", "poincare", "promotion", "counts"}));
  verify->add_flag("--timing", timing, "print elapsed time to stderr");

  auto* render = app.add_subcommand("render", "SVG (or TikZ) picture");
  add_tableau_options(render, tab);
  std::string what = "web";
  render->add_option("--what", what, "matching, diagram or web")
      ->check(CLI::IsMember({"matching", "diagram", "web"}));
  render->add_option("--apex", apex, "triangulation fan apex for webs");
  bool tikz = false;
  render->add_flag("--tikz", tikz, "emit TikZ instead of SVG");
  std::string out_path;
  render->add_option("-o,--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*syt) {
      if (tab.col2.empty()) {
        if (!tab.n || !list_k) throw CLI::RequiredError("syt needs --col2, or --n with --k");
        const auto all = enumerate_tableaux(TwoColumnShape(*tab.n, *list_k));
        if (json) {
          Json list = Json::array();
          for (const auto& t : all) list.push_back(to_json(t));
          print_json(list);
        } else {
          for (const auto& t : all) std::cout << join(t.col2()) << "\n";
        }
        return 0;
      }
      const auto t = read_tableau(tab);
      if (json) {
        print_json(to_json(t));
        return 0;
      }
      std::cout << "shape " << t.shape().to_string() << "\n";
      for (const auto& row : t.rows()) std::cout << "  " << join(row, " ") << "\n";
      std::cout << "tau* = {" << join(tau_star(t)) << "}\n";
      return 0;
    }
    if (*matching) {
      const auto t = read_tableau(tab);
      const auto d = diagram_from_tableau(t);
      if (json) {
        print_json(to_json(d));
        return 0;
      }
      for (const auto& [a, b] : d.edges()) std::cout << "edge " << a << " " << b << "\n";
      for (int r : d.rays()) std::cout << "ray " << r << "\n";
      if (t.rectangular())
        std::cout << "short edges (mod " << t.n() << "): " << join(short_edges_mod(matching_from_tableau(t))) << "\n";
      else
        std::cout << "short edges: " << join(short_edges(d)) << "\n";
      return 0;
    }
    if (*web) {
      const auto w = web_from_tableau(read_tableau(tab), read_apex(apex));
      if (json) {
        print_json(to_json(w));
        return 0;
      }
      for (const auto& c : w.claws()) std::cout << "claw {" << join(c.boundary) << "}\n";
      for (const auto& e : w.edges()) std::cout << "edge " << e.u << " " << e.v << " mult " << e.mult << "\n";
      std::cout << (is_forest(w) ? "forest" : "not a forest") << ", " << components(w) << " component(s)\n";
      return 0;
    }
    if (*classify) {
      const auto t = read_tableau(tab);
      Json verdicts = Json::array();
      bool smooth = false;
      if (t.rectangular()) {
        const auto v = smooth_by_tableau_rect(t);
        smooth = v.smooth;
        verdicts.push_back(to_json(v));
        verdicts.push_back(to_json(smooth_by_web(web_from_tableau(t))));
      } else {
        const auto v = smooth_by_tableau_general(t);
        smooth = v.smooth;
        verdicts.push_back(to_json(v));
      }
      verdicts.push_back(to_json(smooth_by_diagram(diagram_from_tableau(t))));
      print_json(Json{{"tableau", to_json(t)}, {"smooth", smooth}, {"verdicts", verdicts}});
      return 0;
    }
    if (*geometry) {
      const auto t = read_tableau(tab);
      BundleBase base;
      if (via == "web")
        base = base_from_web(web_from_tableau(t));
      else if (via == "diagram")
        base = base_from_diagram(diagram_from_tableau(t));
      else
        base = base_from_triple(t);
      print_json(to_json(canonicalize(base)));
      return 0;
    }
    if (*poincare) {
      const auto t = read_tableau(tab);
      const auto base = base_from_triple(t);
      const auto p = poincare_base(base);
      if (json) {
        print_json(Json{{"coefficients", to_json(p)}, {"factored", factored_form(base)}});
        return 0;
      }
      std::cout << "coefficients: " << to_json(p).dump() << "\n";
      std::cout << "factored: " << factored_form(base) << "\n";
      return 0;
    }
    if (*orbit) {
      const auto w1 = web_from_tableau(read_tableau(tab));
      const auto w2 = web_from_tableau(read_tableau({other, tab.n}));
      const auto cmp = poincare_equal_iff_orbit(w1, w2);
      if (json) {
        Json orbits = Json::array();
        for (const auto* w : {&w1, &w2}) {
          const auto o = dihedral_orbit(*w);
          orbits.push_back({{"canonical_breaks", o.canonical_breaks}, {"size", o.size}});
        }
        print_json(Json{{"poincare_equal", cmp.poincare_equal}, {"same_orbit", cmp.same_orbit}, {"orbits", orbits}});
        return 0;
      }
      std::cout << "poincare_equal=" << std::boolalpha << cmp.poincare_equal << " same_orbit=" << cmp.same_orbit
                << "\n";
      return 0;
    }
    if (*count) {
      const auto total = static_cast<std::int64_t>(enumerate_tableaux(TwoColumnShape::rectangle(count_k)).size());
      const auto smooth = count_smooth(count_k);
      Json j{{"k", count_k}, {"total", total}, {"smooth", smooth}, {"formula", smooth_count_formula(count_k)}};
      if (avoiders) j["avoiders"] = count_pattern_avoiders(count_k);
      if (json) {
        print_json(j);
        return 0;
      }
      std::cout << "total=" << total << " smooth=" << smooth;
      if (avoiders) std::cout << " avoiders=" << j["avoiders"].get<std::int64_t>();
      std::cout << "\n";
      return 0;
    }
    if (*verify) {
      const auto start = std::chrono::steady_clock::now();
      const auto reports = run_suites(max_k, suite);
      const Json j = to_json(reports);
      print_json(j);
      if (timing) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << "elapsed " << elapsed.count() << " s\n";
      }
      return j.at("passed").get<bool>() ? 0 : 1;
    }
    if (*render) {
      const auto t = read_tableau(tab);
      std::string text;
      if (what == "matching") {
        const auto m = matching_from_tableau(t);
        text = tikz ? render_matching_tikz(m) : render_matching(m);
      } else if (what == "diagram") {
        const auto d = diagram_from_tableau(t);
        text = tikz ? render_diagram_tikz(d) : render_diagram(d);
      } else {
        const auto w = web_from_tableau(t, read_apex(apex));
        text = tikz ? render_web_tikz(w) : render_web(w);
      }
      return write_output(text, out_path);
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
