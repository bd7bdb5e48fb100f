#include "wsys/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "wsys/dmat.hpp"
#include "wsys/errors.hpp"
#include "wsys/glws.hpp"
#include "wsys/hopf.hpp"
#include "wsys/invariants.hpp"

namespace wsys {

namespace {

class Run {
 public:
  explicit Run(VerifySuiteReport& r) : r_(r) {}

  void check(bool ok, const std::string& encoding) {
    ++r_.count;
    if (!ok) r_.failures.push_back(encoding);
  }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }

 private:
  VerifySuiteReport& r_;
};

std::string pair_text(std::uint32_t a, std::uint32_t b) {
  return std::to_string(a) + "," + std::to_string(b);
}

std::string orbit_text(Orbit2 o) { return "(" + pair_text(o.first, o.second) + ")"; }

Perm random_perm(std::uint32_t m, std::mt19937_64& rng) {
  std::vector<std::uint32_t> img(m);
  for (std::uint32_t i = 0; i < m; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

std::uint64_t mask_of(std::initializer_list<std::uint32_t> points) {
  std::uint64_t s = 0;
  for (auto p : points) s |= std::uint64_t{1} << (p - 1);
  return s;
}

std::uint64_t all_points(std::uint32_t m) { return (std::uint64_t{1} << m) - 1; }

RatFunc graph_interlace_at_z2(const Poly& l) {
  return RatFunc(subst(l, {{Var::x(), Poly::var(Var::z(), 2)}}), 0);
}

template <class F>
void for_perms(std::uint32_t max_m, F&& f) {
  for (std::uint32_t m = 0; m <= max_m; ++m) {
    for (const auto& a : all_perms(m)) f(a);
  }
}

template <class F>
void for_diagrams(std::uint32_t lo, std::uint32_t hi, F&& f) {
  for (std::uint32_t n = lo; n <= hi; ++n) {
    for (const auto& d : all_chord_diagrams(n)) f(d);
  }
}

template <class F>
void for_graphs(std::uint32_t lo, std::uint32_t hi, F&& f) {
  for (std::uint32_t n = lo; n <= hi; ++n) {
    for (const auto& g : all_graphs(n)) f(g);
  }
}

// ---------------------------------------------------------------- suites

void tgl_soundness(Run& run, const VerifyBounds& b) {
  const Poly n = Var::N();
  for (std::uint32_t m = 2; m <= b.max_m; ++m) {
    for (const auto& a : all_perms(m)) {
      const Poly w = wgl(a);
      for (std::uint32_t l = 1; l < m; ++l) {
        const auto s = recurrence_step(a, l);
        const Poly rhs = wgl(s.swapped) + n.pow(s.n_first) * wgl(s.merge_first) -
                         n.pow(s.n_second) * wgl(s.merge_second);
        run.check(w == rhs, format_perm(a) + " l=" + std::to_string(l));
      }
    }
  }
  for (std::uint32_t ma = 1; ma < b.max_m; ++ma) {
    for (std::uint32_t mb = 1; ma + mb <= b.max_m; ++mb) {
      for (const auto& x : all_perms(ma)) {
        for (const auto& y : all_perms(mb)) {
          run.check(wgl(concat(x, y)) == wgl(x) * wgl(y), "concat " + format_perm(x) + " | " + format_perm(y));
        }
      }
    }
  }
}

void tfe(Run& run, const VerifyBounds& b) {
  for_perms(b.max_m, [&](const Perm& a) { run.check(feps(a) == feps_direct(a), format_perm(a)); });
  std::mt19937_64 rng(b.seed);
  for (std::uint32_t i = 0; i < b.random; ++i) {
    const Perm a = random_perm(b.random_m, rng);
    run.check(feps(a) == feps_direct(a), format_perm(a));
  }
}

void tsr(Run& run, const VerifyBounds& b) {
  for_perms(b.max_m, [&](const Perm& a) {
    run.check(spec_standard(a) == Poly::var(Var::N(), face_count(a) - 1), format_perm(a));
  });
}

void trsc(Run& run, const VerifyBounds& b) {
  for_diagrams(1, b.max_chords, [&](const Perm& d) {
    bool ok = true;
    try {
      feps_in_v(d);
    } catch (const std::logic_error&) {
      ok = false;
    }
    run.check(ok, format_perm(d));
  });
}

void tis(Run& run, const VerifyBounds& b) {
  std::uint64_t shifted = 0, total = 0;
  for_diagrams(2, b.max_chords, [&](const Perm& d) {
    const RatFunc l = interlace_perm(d);
    bool even = true;
    for (const auto& [mono, c] : l.num().terms()) even = even && mono.degree(Var::z()) % 2 == 0;
    const Poly lg = interlace_graph(intersection_graph(d));
    run.check(l.is_polynomial() && even && l == graph_interlace_at_z2(lg), format_perm(d));
    ++total;
    shifted += l == graph_interlace_at_z2(shift_interlace(lg));
  });
  const RatFunc k1 = interlace_perm(Perm({2, 1}));
  run.note("single chord: L = " + to_string(k1) + ", L_K1(z^2) = " +
           to_string(graph_interlace_at_z2(interlace_graph(Graph(1)))));
  run.note("equal to the x^n-normalized interlace L(z^2 - 1) on " + std::to_string(shifted) + "/" +
           std::to_string(total) + " diagrams");
}

void fourterm_graphs(Run& run, const VerifyBounds& b) {
  const GraphInvariant fs[] = {invariant::skew_char(), invariant::refined_skew_char(), invariant::interlace()};
  for_graphs(2, b.max_vertices, [&](const Graph& g) {
    for (std::uint32_t x = 1; x <= g.size(); ++x) {
      for (std::uint32_t y = 1; y <= g.size(); ++y) {
        if (x == y) continue;
        for (const auto& f : fs) {
          run.check(graph_4t_check(f, g, x, y), f.name + " " + format_graph(g) + " a,b=" + pair_text(x, y));
        }
      }
    }
  });
}

void fourterm_diagrams(Run& run, const VerifyBounds& b) {
  for_diagrams(2, b.max_chords, [&](const Perm& d) {
    const auto idx = chord_index(d);
    const std::uint32_t m = d.size();
    for (std::uint32_t e = 1; e <= m; ++e) {
      const std::uint32_t e2 = e % m + 1;
      if (d(e) == e2) continue;
      const auto q = chord_4t_quadruple(d, e, e2);
      const std::string enc = format_perm(d) + " e,e'=" + pair_text(e, e2);
      const Poly alt = wgl(q.diagrams[0]) - wgl(q.diagrams[1]) - wgl(q.diagrams[2]) + wgl(q.diagrams[3]);
      run.check(alt.is_zero(), "wgl " + enc);
      const auto img = four_term_images(intersection_graph(d), idx[e] + 1, idx[e2] + 1);
      const bool graphs = intersection_graph_tracked(q.diagrams[1], d, q.relabel[1]) == img.toggled &&
                          intersection_graph_tracked(q.diagrams[2], d, q.relabel[2]) == img.rewired &&
                          intersection_graph_tracked(q.diagrams[3], d, q.relabel[3]) == img.rewired_toggled;
      run.check(graphs, "graphs " + enc);
    }
  });
}

void pivot_invariance(Run& run, const VerifyBounds& b) {
  for (std::uint32_t m = 4; m <= b.max_m; ++m) {
    for (const auto& a : all_perms(m)) {
      const auto pairs = interlacing_two_cycles(a);
      if (pairs.empty()) continue;
      const RatFunc l = interlace_perm(a);
      for (const auto& [x, y] : pairs) {
        run.check(interlace_perm(perm_pivot(a, x, y)) == l,
                  format_perm(a) + " a=" + orbit_text(x) + " b=" + orbit_text(y));
      }
    }
  }
}

void perm_recurrence(Run& run, const VerifyBounds& b) {
  // Reading 1 removes both 2-cycles in both terms; reading 2 removes a from
  // alpha and b from the pivot, as in the graph recursion.
  std::uint64_t r1_arc = 0, r2_arc = 0, arcs = 0, graph_arc = 0;
  std::uint64_t r1_all = 0, r2_all = 0, all = 0;
  std::string r1_counter, r2_counter;
  for (std::uint32_t m = 4; m <= b.max_m; ++m) {
    for (const auto& a : all_perms(m)) {
      for (const auto& [x, y] : interlacing_two_cycles(a)) {
        const Perm p = perm_pivot(a, x, y);
        const auto [xp, yp] = pivot_orbits(x, y);
        const std::uint64_t full = all_points(m);
        const RatFunc l = interlace_perm(a);
        const RatFunc r1 = interlace_perm(subperm(a, full & ~mask_of({x.first, x.second, y.first, y.second}))) +
                           interlace_perm(subperm(p, full & ~mask_of({xp.first, xp.second, yp.first, yp.second})));
        const RatFunc r2 = interlace_perm(subperm(a, full & ~mask_of({x.first, x.second}))) +
                           interlace_perm(subperm(p, full & ~mask_of({yp.first, yp.second})));
        const bool ok1 = l == r1, ok2 = l == r2;
        ++all;
        r1_all += ok1;
        r2_all += ok2;
        const std::string enc = format_perm(a) + " a=" + orbit_text(x) + " b=" + orbit_text(y);
        if (!ok1 && r1_counter.empty()) r1_counter = enc;
        if (!ok2 && r2_counter.empty()) r2_counter = enc;
        if (a.is_chord_diagram()) {
          ++arcs;
          r1_arc += ok1;
          r2_arc += ok2;
          // Ground truth: the graph recursion on the intersection graph.
          const Graph g = intersection_graph(a);
          const auto idx = chord_index(a);
          const std::uint32_t va = idx[x.first] + 1, vb = idx[y.first] + 1;
          const Poly lg = interlace_graph(remove_vertex(g, va)) +
                          interlace_graph(remove_vertex(graph_pivot(g, va, vb), vb));
          graph_arc += graph_interlace_at_z2(shift_interlace(lg)) == l;
        }
        run.check(true, enc);
      }
    }
  }
  auto frac = [](std::uint64_t k, std::uint64_t n) { return std::to_string(k) + "/" + std::to_string(n); };
  run.note("arc diagrams: reading 1 (drop both 2-cycles) holds on " + frac(r1_arc, arcs) +
           ", reading 2 (drop a, then b of the pivot) on " + frac(r2_arc, arcs) +
           "; graph recursion reproduces L on " + frac(graph_arc, arcs));
  run.note("all permutations: reading 1 holds on " + frac(r1_all, all) + ", reading 2 on " + frac(r2_all, all));
  if (!r1_counter.empty()) run.note("reading 1 counterexample: " + r1_counter);
  if (!r2_counter.empty()) run.note("reading 2 counterexample: " + r2_counter);
}

void hopf_eps(Run& run, const VerifyBounds& b) {
  const auto k1 = primitive_eval([](const Perm& d) { return feps(d); }, Perm({2, 1}));
  run.check(k1 == feps(Perm({2, 1})), "(1 2)");
  for_diagrams(2, b.max_chords, [&](const Perm& d) {
    const auto r = eps_independence_check(d);
    run.check(r.independent && r.value == r.standard_value, format_perm(d));
  });
  const auto k2 = eps_independence_check(Perm({3, 4, 1, 2}));
  run.check(k2.value == Poly(1) - Poly::var(Var::N(), 2), "(1 3)(2 4) value");
  run.note("F_eps(pi((1 3)(2 4))) = " + to_string(k2.value));
  if (b.max_chords >= 3) {
    run.note("F_eps(pi((1 4)(2 5)(3 6))) = " + to_string(eps_independence_check(Perm({4, 5, 6, 1, 2, 3})).value));
  }
}

void dmat_axiom(Run& run, const VerifyBounds& b) {
  for_graphs(0, b.max_vertices, [&](const Graph& g) {
    const DMat d = dmat_from_graph(g);
    run.check(check_symmetric_exchange(d), format_graph(g));
    for (Subset s = 1; s <= d.full(); ++s) {
      run.check(check_symmetric_exchange(partial_dual(d, s)), format_graph(g) + " dual " + format_subset(s));
    }
  });
}

void distance_corank(Run& run, const VerifyBounds& b) {
  for_graphs(0, b.max_vertices, [&](const Graph& g) {
    const DMat d = dmat_from_graph(g);
    for (Subset u = 0; u <= d.full(); ++u) {
      run.check(distance(d, u) == g.corank_on(u), format_graph(g) + " U=" + format_subset(u));
    }
  });
}

void distance_faces(Run& run, const VerifyBounds& b) {
  for_diagrams(1, b.max_chords, [&](const Perm& c) {
    const DMat d = dmat_from_chord_diagram(c);
    run.check(d == dmat_from_graph(intersection_graph(c)), format_perm(c));
    for (Subset u = 0; u <= d.full(); ++u) {
      run.check(distance(d, u) + 1 == face_count(sub_diagram(c, u)), format_perm(c) + " U=" + format_subset(u));
    }
  });
}

void gl11_skewchar_suite(Run& run, const VerifyBounds& b) {
  for_diagrams(1, b.max_chords, [&](const Perm& d) {
    run.check(gl11_skewchar(d) == skew_char(intersection_graph(d)), format_perm(d));
  });
  const auto q = invariant::skew_char();
  const auto qbar = invariant::refined_skew_char();
  const auto nondeg = invariant::nondegeneracy();
  const auto upow = invariant::vertex_power(Var::u());
  const auto npow = invariant::corank_power(Var::w());
  for_graphs(0, b.max_vertices, [&](const Graph& g) {
    run.check(convolution(nondeg, upow, g) == q(g), "Q " + format_graph(g));
    run.check(convolution(q, npow, g) == qbar(g), "Qbar " + format_graph(g));
  });
}

void interlace_equivalence(Run& run, const VerifyBounds& b) {
  for_graphs(0, b.max_vertices, [&](const Graph& g) {
    const Poly l = interlace_graph(g);
    run.check(interlace_graph_recursive(g) == l, format_graph(g));
    run.check(interlace_graph_recursive(g, EdgePolicy::kRandom, static_cast<unsigned>(b.seed)) == l,
              "random edges " + format_graph(g));
  });
  const Graph diamond = parse_graph("n=4; edges=1-2,1-3,2-3,2-4,3-4");
  run.check(to_string(interlace_graph_recursive(diamond)) == "2*x^2 + 8*x + 6", format_graph(diamond));
  run.check(to_string(interlace_graph_recursive(Graph::complete(3))) == "4*x + 4", format_graph(Graph::complete(3)));
}

void abs04(Run& run, const VerifyBounds& b) {
  const Poly x = Var::x(), y = Var::y();
  for_graphs(0, b.max_vertices, [&](const Graph& g) {
    const DMat d = dmat_from_graph(g);
    const Poly lbar = two_var_interlace(d);
    const std::string enc = format_graph(g);
    for (std::uint32_t e = 1; e <= d.ground_size(); ++e) {
      const DMat twisted = partial_dual(d, Subset{1} << (e - 1));
      Poly rhs;
      if (is_loop(d, e)) {
        rhs = (Poly(1) + x * y) * two_var_interlace(dmat_delete(d, e));
      } else if (is_coloop(d, e)) {
        rhs = (x + y) * two_var_interlace(dmat_delete(twisted, e));
      } else {
        rhs = two_var_interlace(dmat_delete(d, e)) + x * two_var_interlace(dmat_delete(twisted, e));
      }
      run.check(lbar == rhs, enc + " e=" + std::to_string(e));
    }
    // Qbar(u, v) = Lbar(1/u, v) u^|E|, compared monomial by monomial.
    Poly reflected;
    for (const auto& [mono, c] : lbar.terms()) {
      reflected.add_term(Monomial{{Var::u(), d.ground_size() - mono.degree(Var::x())},
                                  {Var::v(), mono.degree(Var::y())}},
                         c);
    }
    const Poly qbar = refined_skew_char_dmat(d);
    run.check(reflected == subst(qbar, {{Var::w(), Poly(Var::v())}}), "reflection " + enc);
    run.check(interlace_dmat(d) == subst(qbar, {{Var::u(), Poly(1)}, {Var::w(), x}}), "L = Qbar(1, x) " + enc);
  });
}

void partial_dual_invariance(Run& run, const VerifyBounds& b) {
  for_graphs(0, b.max_vertices, [&](const Graph& g) {
    const DMat d = dmat_from_graph(g);
    const Poly l = interlace_dmat(d);
    for (Subset s = 0; s <= d.full(); ++s) {
      run.check(interlace_dmat(partial_dual(d, s)) == l, format_graph(g) + " S=" + format_subset(s));
    }
    for (const auto& [a, c] : g.edges()) {
      const Subset ac = (Subset{1} << (a - 1)) | (Subset{1} << (c - 1));
      run.check(dmat_from_graph(swap_vertices(graph_pivot(g, a, c), a, c)) == partial_dual(d, ac),
                "pivot " + format_graph(g) + " a,b=" + pair_text(a, c));
    }
  });
}

void casimir_n(Run& run, const VerifyBounds& b) {
  std::uint64_t diagrams = 0, diagrams_ok = 0, perms = 0, perms_ok = 0;
  std::string counter;
  for_perms(b.max_m, [&](const Perm& a) {
    const bool ok = casimir_to_N(a) == Poly::var(Var::N(), cycle_count(a));
    ++perms;
    perms_ok += ok;
    if (a.is_chord_diagram()) {
      ++diagrams;
      diagrams_ok += ok;
    }
    if (!ok && counter.empty()) counter = format_perm(a);
    run.check(true, format_perm(a));
  });
  run.note("C_k -> N gives N^c on " + std::to_string(diagrams_ok) + "/" + std::to_string(diagrams) +
           " chord diagrams and " + std::to_string(perms_ok) + "/" + std::to_string(perms) + " permutations");
  if (!counter.empty()) run.note("first counterexample: " + counter);
}

void positivity(Run& run, const VerifyBounds& b) {
  std::uint64_t nonneg = 0, nonpos = 0, mixed = 0;
  std::vector<std::string> examples;
  for_perms(b.max_m, [&](const Perm& a) {
    const auto s = interlace_perm(a).series(b.order);
    const bool has_neg = std::any_of(s.begin(), s.end(), [](const Coef& c) { return c < 0; });
    const bool has_pos = std::any_of(s.begin(), s.end(), [](const Coef& c) { return c > 0; });
    if (!has_neg) {
      ++nonneg;
    } else if (!has_pos) {
      ++nonpos;
    } else {
      ++mixed;
    }
    if (has_neg && examples.size() < 5) examples.push_back(format_perm(a) + ": " + series_to_string(s));
    run.check(true, format_perm(a));
  });
  run.note("nonnegative series: " + std::to_string(nonneg) + ", nonpositive: " + std::to_string(nonpos) +
           ", mixed signs: " + std::to_string(mixed) + " (to order " + std::to_string(b.order) + ")");
  for (const auto& e : examples) run.note("negative coefficient: " + e);
}

struct SuiteDef {
  const char* name;
  bool experiment;
  void (*fn)(Run&, const VerifyBounds&);
};

const SuiteDef kSuites[] = {
    {"tgl-soundness", false, tgl_soundness},
    {"tfe", false, tfe},
    {"tsr", false, tsr},
    {"trsc", false, trsc},
    {"tis", false, tis},
    {"fourterm-graphs", false, fourterm_graphs},
    {"fourterm-diagrams", false, fourterm_diagrams},
    {"pivot-invariance", false, pivot_invariance},
    {"perm-recurrence", true, perm_recurrence},
    {"hopf-eps", false, hopf_eps},
    {"dmat-axiom", false, dmat_axiom},
    {"distance-corank", false, distance_corank},
    {"distance-faces", false, distance_faces},
    {"gl11-skewchar", false, gl11_skewchar_suite},
    {"interlace-equivalence", false, interlace_equivalence},
    {"abs04", false, abs04},
    {"partial-dual-invariance", false, partial_dual_invariance},
    {"casimir-N", true, casimir_n},
    {"positivity-experiment", true, positivity},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.name);
  return out;
}

VerifySuiteReport run_suite(const std::string& name, const VerifyBounds& bounds) {
  for (const auto& s : kSuites) {
    if (name != s.name) continue;
    VerifySuiteReport r;
    r.name = s.name;
    r.experiment = s.experiment;
    Run run(r);
    const auto t0 = std::chrono::steady_clock::now();
    s.fn(run, bounds);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw ParseError("unknown verify suite '" + name + "'");
}

std::string format_report(const VerifySuiteReport& r, std::size_t max_failures) {
  std::ostringstream out;
  out << r.name << ": ";
  if (r.experiment) {
    out << "REPORT";
  } else {
    out << (r.failures.empty() ? "PASS" : "FAIL");
  }
  out << " (" << r.count << " instances";
  if (!r.failures.empty()) out << ", " << r.failures.size() << " failed";
  out << ")\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) out << "  fail: " << r.failures[i] << "\n";
  if (r.failures.size() > max_failures) out << "  ... " << r.failures.size() - max_failures << " more\n";
  for (const auto& n : r.notes) out << "  " << n << "\n";
  return out.str();
}

std::string report_json(const std::vector<VerifySuiteReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    out.push_back({{"suite", r.name},
                   {"experiment", r.experiment},
                   {"passed", r.passed()},
                   {"count", r.count},
                   {"failures", r.failures},
                   {"notes", r.notes},
                   {"wall_seconds", r.wall_seconds}});
  }
  return out.dump(2);
}

}  // namespace wsys
