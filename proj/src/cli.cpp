#include "wsys/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "wsys/dmat.hpp"
#include "wsys/errors.hpp"
#include "wsys/glws.hpp"
#include "wsys/graphs.hpp"
#include "wsys/invariants.hpp"
#include "wsys/perm.hpp"
#include "wsys/verify.hpp"

namespace wsys {

namespace {

struct Input {
  std::optional<std::string> perm, graph, dmat;
  std::optional<std::uint32_t> m;

  void add_perm(CLI::App* app) {
    app->add_option("--perm", perm, "permutation: one-line \"3,1,2\" or cycles \"(1 3 2)\"");
    app->add_option("--m", m, "number of points for cycle notation");
  }
  void add_graph(CLI::App* app) { app->add_option("--graph", graph, "graph: \"n=3; edges=1-2,2-3\""); }
  void add_dmat(CLI::App* app) { app->add_option("--dmat", dmat, "delta-matroid: \"E=2; phi={},{1,2}\""); }

  Perm get_perm() const { return parse_perm(*perm, m); }
  std::size_t given() const { return perm.has_value() + graph.has_value() + dmat.has_value(); }
};

std::uint32_t parse_point(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v == 0 || v > 64) throw ParseError("bad point '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

Orbit2 parse_orbit(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected a 2-cycle as i,j: '" + s + "'");
  Orbit2 o{parse_point(s.substr(0, comma)), parse_point(s.substr(comma + 1))};
  if (o.first > o.second) std::swap(o.first, o.second);
  return o;
}

void need_one(const Input& in, const std::string& what) {
  if (in.given() != 1) throw ParseError("give exactly one of " + what);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight systems, F_eps specializations and interlace polynomials, in exact arithmetic", "wsys"};
  app.require_subcommand(1);

  Input in;

  auto* wgl_cmd = app.add_subcommand("wgl", "universal gl weight system of a permutation");
  in.add_perm(wgl_cmd);
  std::uint32_t cap = 10;
  wgl_cmd->add_option("--cap", cap, "largest permutation accepted");

  auto* faces_cmd = app.add_subcommand("faces", "number of faces (cycles of sigma o alpha^-1)");
  in.add_perm(faces_cmd);

  auto* feps_cmd = app.add_subcommand("feps", "F_eps specialization of a permutation");
  in.add_perm(feps_cmd);
  bool direct = false, in_v = false;
  feps_cmd->add_flag("--direct", direct, "direct binomial sum over subsets");
  feps_cmd->add_flag("--in-v", in_v, "chord diagrams: rewrite in v = 2eps + N*eps^2");

  auto* interlace_cmd = app.add_subcommand("interlace", "interlace polynomial");
  in.add_perm(interlace_cmd);
  in.add_graph(interlace_cmd);
  in.add_dmat(interlace_cmd);
  bool shifted = false;
  interlace_cmd->add_flag("--shifted", shifted, "apply x -> x - 1 (x^n-based normalization)");

  auto* skew_cmd = app.add_subcommand("skewchar", "skew characteristic polynomial");
  in.add_perm(skew_cmd);
  in.add_graph(skew_cmd);
  in.add_dmat(skew_cmd);
  bool refined = false;
  skew_cmd->add_flag("--refined", refined, "two-variable refinement Qbar(u, w)");

  auto* dmat_cmd = app.add_subcommand("dmat", "delta-matroid of a graph or chord diagram");
  in.add_perm(dmat_cmd);
  in.add_graph(dmat_cmd);
  std::string dual;
  dmat_cmd->add_option("--dual", dual, "partial dual by a subset, e.g. \"{1,3}\"");

  auto* pivot_cmd = app.add_subcommand("pivot", "pivot of a permutation or graph");
  in.add_perm(pivot_cmd);
  in.add_graph(pivot_cmd);
  std::string pa, pb;
  pivot_cmd->add_option("--a", pa, "2-cycle i,j (permutation) or vertex (graph)")->required();
  pivot_cmd->add_option("--b", pb, "2-cycle k,l (permutation) or vertex (graph)")->required();

  auto* series_cmd = app.add_subcommand("series", "interlace rational function and its power series");
  in.add_perm(series_cmd);
  std::uint32_t order = 12;
  series_cmd->add_option("--order", order, "last coefficient printed");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  VerifyBounds bounds;
  bool json = false;
  verify_cmd->add_option("suites", suites, "suite names, or all")->required();
  verify_cmd->add_option("--max-m", bounds.max_m, "largest permutation size");
  verify_cmd->add_option("--max-chords", bounds.max_chords, "largest chord diagram");
  verify_cmd->add_option("--max-vertices", bounds.max_vertices, "largest graph");
  verify_cmd->add_option("--order", bounds.order, "series order for the positivity experiment");
  verify_cmd->add_option("--random", bounds.random, "random permutations in tfe");
  verify_cmd->add_option("--random-m", bounds.random_m, "size of the random permutations");
  verify_cmd->add_option("--seed", bounds.seed, "random seed");
  verify_cmd->add_flag("--json", json, "machine-readable report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (wgl_cmd->parsed()) {
      need_one(in, "--perm");
      WglEngine engine(WglOptions{cap, true, true});
      out << to_string(engine.wgl(in.get_perm())) << "\n";
    } else if (faces_cmd->parsed()) {
      need_one(in, "--perm");
      out << face_count(in.get_perm()) << "\n";
    } else if (feps_cmd->parsed()) {
      need_one(in, "--perm");
      const Perm p = in.get_perm();
      if (in_v) {
        out << to_string(feps_in_v(p)) << "\n";
      } else {
        out << to_string(direct ? feps_direct(p) : feps(p)) << "\n";
      }
    } else if (interlace_cmd->parsed()) {
      need_one(in, "--perm, --graph or --dmat");
      if (in.perm) {
        if (shifted) throw ParseError("--shifted applies to graphs and delta-matroids");
        out << to_string(interlace_perm(in.get_perm())) << "\n";
      } else {
        const Poly l = !in.graph ? interlace_dmat(parse_dmat(*in.dmat)) : interlace_graph(parse_graph(*in.graph));
        out << to_string(shifted ? shift_interlace(l) : l) << "\n";
      }
    } else if (skew_cmd->parsed()) {
      need_one(in, "--perm, --graph or --dmat");
      if (in.perm) {
        const Perm p = in.get_perm();
        out << to_string(refined ? refined_skew_char_graph(intersection_graph(p)) : gl11_skewchar(p)) << "\n";
      } else if (in.graph) {
        const Graph g = parse_graph(*in.graph);
        out << to_string(refined ? refined_skew_char_graph(g) : skew_char(g)) << "\n";
      } else {
        const DMat d = parse_dmat(*in.dmat);
        const Poly q = refined_skew_char_dmat(d);
        out << to_string(refined ? q : subst(q, {{Var::w(), Poly()}})) << "\n";
      }
    } else if (dmat_cmd->parsed()) {
      need_one(in, "--perm or --graph");
      DMat d = !in.perm ? dmat_from_graph(parse_graph(*in.graph)) : dmat_from_chord_diagram(in.get_perm());
      if (!dual.empty()) {
        const DMat s = parse_dmat("E=" + std::to_string(d.ground_size()) + "; phi=" + dual);
        if (s.admissible().size() != 1) throw ParseError("--dual takes a single subset");
        d = partial_dual(d, s.admissible().front());
      }
      out << format_dmat(d) << "\n";
    } else if (pivot_cmd->parsed()) {
      need_one(in, "--perm or --graph");
      if (in.perm) {
        out << format_perm(perm_pivot(in.get_perm(), parse_orbit(pa), parse_orbit(pb))) << "\n";
      } else {
        const Graph g = parse_graph(*in.graph);
        out << format_graph(graph_pivot(g, parse_point(pa), parse_point(pb))) << "\n";
      }
    } else if (series_cmd->parsed()) {
      need_one(in, "--perm");
      const RatFunc l = interlace_perm(in.get_perm());
      out << to_string(l) << "\n" << series_to_string(l.series(order)) << "\n";
    } else if (verify_cmd->parsed()) {
      if (std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
      std::vector<VerifySuiteReport> reports;
      bool ok = true;
      for (const auto& name : suites) {
        reports.push_back(run_suite(name, bounds));
        ok = ok && reports.back().passed();
        if (!json) out << format_report(reports.back()) << std::flush;
      }
      if (json) out << report_json(reports) << "\n";
      return ok ? kExitOk : kExitVerify;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace wsys
