#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "univoque/expansions.hpp"
#include "univoque/graph.hpp"
#include "univoque/oracle.hpp"
#include "univoque/spectral.hpp"

using namespace univoque;
using nlohmann::ordered_json;

namespace {

struct BaseOpts {
  Digit M = 1;
  std::string beta, alpha;
  std::string precision = "1e-12";
  bool json = false;
};

void add_base_opts(CLI::App* sub, BaseOpts& o, bool json_flag = true) {
  sub->add_option("-M", o.M, "largest digit")->required();
  sub->add_option("--beta", o.beta, "greedy expansion of 1, e.g. \"111(0)\"");
  sub->add_option("--alpha", o.alpha, "quasi-greedy expansion of 1, e.g. \"(110)\"");
  sub->add_option("--precision", o.precision, "isolation width, e.g. 1e-12 or 1/1000");
  if (json_flag) sub->add_flag("--json", o.json, "machine-readable output");
}

Rat parse_precision(const std::string& s) {
  auto e = s.find_first_of("eE");
  try {
    if (e != std::string::npos) {
      Rat mant(s.substr(0, e));
      int ex = std::stoi(s.substr(e + 1));
      Rat p = mant;
      for (int i = 0; i < std::abs(ex); ++i) p = ex < 0 ? Rat(p / 10) : Rat(p * 10);
      p.canonicalize();
      if (p > 0) return p;
    } else {
      Rat p(s);
      p.canonicalize();
      if (p > 0) return p;
    }
  } catch (const std::exception&) {
  }
  throw ValidationError("bad precision '" + s + "'");
}

BaseContext make_ctx(const BaseOpts& o) {
  Rat prec = parse_precision(o.precision);
  if (o.beta.empty() == o.alpha.empty()) throw ValidationError("give exactly one of --beta or --alpha");
  if (!o.beta.empty()) return new_base_context(o.M, parse_seq(o.beta), prec);
  return context_from_alpha(o.M, parse_seq(o.alpha), prec);
}

std::string q_approx(const BaseContext& ctx, int places = 12) { return ctx.field->approx(places); }

ordered_json ctx_json(const BaseContext& ctx) {
  return {{"M", ctx.M},
          {"beta", to_string(ctx.beta)},
          {"alpha", to_string(ctx.alpha)},
          {"class", class_name(ctx.cls)},
          {"q", q_approx(ctx)},
          {"N", ctx.N},
          {"polynomial", ctx.poly.to_string("q")}};
}

void print_ctx(std::ostream& os, const BaseContext& ctx) {
  os << "beta      " << to_string(ctx.beta) << "\n"
     << "alpha     " << to_string(ctx.alpha) << "\n"
     << "class     " << class_name(ctx.cls) << "\n"
     << "q         " << q_approx(ctx) << "\n"
     << "N         " << ctx.N << "\n"
     << "poly      " << ctx.poly.to_string("q") << "\n";
}

void emit(const BaseOpts& o, const ordered_json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void write_to(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << content;
}

std::string graph_text(const UnivoqueGraph& g) {
  std::ostringstream os;
  os << variant_name(g.variant) << " graph: " << g.size() << " vertices, " << g.edges.size() << " edges\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  v" << i << " " << g.vertices[i].name() << " digit " << g.vertices[i].forced;
    auto in = 0;
    for (const auto& e : g.edges) in += e.to == static_cast<int>(i);
    if (in == 0) os << " (no incoming edge)";
    os << "\n";
  }
  for (const auto& e : g.edges)
    os << "  " << g.vertices[e.from].name() << " -" << e.label << "-> " << g.vertices[e.to].name() << "\n";
  return os.str();
}

ordered_json names_of(const UnivoqueGraph& g, const std::vector<int>& ids) {
  ordered_json a = ordered_json::array();
  for (int v : ids) a.push_back(g.vertices[v].name());
  return a;
}

std::string dec(long double v, int places = 12) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(places) << v;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"univoque: graphs, dimensions and expansion counts for non-integer bases"};
  app.require_subcommand(1);
  BaseOpts o;

  auto* base = app.add_subcommand("base", "base q from its expansion of 1");
  base->require_subcommand(1);
  auto* classify = base->add_subcommand("classify", "class of q and its expansions of 1");
  add_base_opts(classify, o);
  auto* chain = base->add_subcommand("chain", "successor or r chain");
  add_base_opts(chain, o);
  std::string kind = "v";
  int steps = 3;
  chain->add_option("--kind", kind, "v|r")->check(CLI::IsMember({"v", "r"}));
  chain->add_option("--steps", steps, "number of steps")->check(CLI::Range(0, 64));
  auto* points = base->add_subcommand("points", "special points and their order");
  add_base_opts(points, o);

  auto* graph = app.add_subcommand("graph", "labeled interval graphs");
  graph->require_subcommand(1);
  std::string variant = "full", dot_path, json_path;
  auto* build = graph->add_subcommand("build", "vertices and edges");
  add_base_opts(build, o, false);
  build->add_option("--variant", variant, "full|tilde|tilde1");
  auto* dot_opt = build->add_option("--dot", dot_path, "write DOT to PATH (- for stdout)")->expected(0, 1);
  auto* json_out = build->add_option("--json", json_path, "write JSON to PATH (stdout without PATH)")->expected(0, 1);
  auto* sccs = graph->add_subcommand("scc", "strongly connected components");
  add_base_opts(sccs, o);
  sccs->add_option("--variant", variant, "full|tilde|tilde1");
  auto* verify = graph->add_subcommand("verify", "isomorphism along the successor, or the tower");
  add_base_opts(verify, o);
  std::string theorem = "iso";
  int vsteps = 3;
  verify->add_option("--theorem", theorem, "iso|tower (also 1.3|1.4)")
      ->check(CLI::IsMember({"iso", "tower", "1.3", "1.4"}));
  verify->add_option("--steps", vsteps, "tower height")->check(CLI::Range(1, 8));
  auto* conn = graph->add_subcommand("connectivity", "strong connectivity criteria");
  add_base_opts(conn, o);

  auto* dim = app.add_subcommand("dim", "spectral radius, entropy and dimension");
  add_base_opts(dim, o);
  bool per_scc = false;
  std::string dim_variant = "tilde";
  dim->add_flag("--per-scc", per_scc, "radius of every component");
  dim->add_option("--variant", dim_variant, "full|tilde|tilde1");

  auto* exp = app.add_subcommand("expansions", "expansions of a point");
  exp->require_subcommand(1);
  auto* count = exp->add_subcommand("count", "number of expansions of x");
  add_base_opts(count, o);
  std::string xs = "1(0)";
  std::size_t cap = DEFAULT_CAP;
  count->add_option("--x", xs, "point as a digit sequence");
  count->add_option("--cap", cap, "remainder limit")->check(CLI::PositiveNumber);
  auto* witness = exp->add_subcommand("witness", "point with exactly m expansions");
  add_base_opts(witness, o);
  int m = 2;
  std::string cs;
  bool weak = false;
  witness->add_option("-m", m, "number of expansions")->check(CLI::Range(1, 12));
  witness->add_option("--c", cs, "tail sequence (default: searched)");
  witness->add_flag("--weak", weak, "accept the non-strict conditions");

  auto* oracle = app.add_subcommand("oracle", "brute-force references");
  oracle->require_subcommand(1);
  auto* words = oracle->add_subcommand("words", "admissible words of length L");
  add_base_opts(words, o);
  int L = 4;
  std::string mode;
  words->add_option("-L", L, "word length")->check(CLI::Range(0, 12));
  words->add_option("--mode", mode, "u|v (default from the class of q)");
  bool compare_graph = false;
  words->add_flag("--compare-graph", compare_graph, "also compare with graph path words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    BaseContext ctx = make_ctx(o);
    std::ostringstream text;
    ordered_json j;

    if (*classify) {
      j = ctx_json(ctx);
      print_ctx(text, ctx);
      emit(o, j, text.str());
    } else if (*chain) {
      j = ordered_json::array();
      for (int k = 0; k <= steps; ++k) {
        BaseContext c = kind == "v" ? ctx : r_chain(ctx, k);
        if (kind == "v")
          for (int i = 0; i < k; ++i) c = v_successor(c);
        auto cj = ctx_json(c);
        j.push_back(cj);
        text << k << "  " << to_string(c.beta) << "  alpha " << to_string(c.alpha) << "  " << class_name(c.cls)
             << "  q=" << q_approx(c) << "\n";
      }
      if (kind == "r") {
        text << "p_R alpha " << to_string(p_right_alpha(ctx)) << "\n";
      }
      emit(o, j, text.str());
    } else if (*points) {
      auto sp = special_points(ctx);
      auto order = order_points(ctx, sp);
      j["order"] = order.to_string();
      ordered_json pts = ordered_json::array();
      text << order.to_string() << "\n";
      for (const auto& c : order.classes)
        for (const auto& p : c.members) {
          pts.push_back({{"name", p.name()}, {"value", p.value.approx(12)}, {"key", to_string(p.key)}});
          text << "  " << p.name() << "  " << p.value.approx(12) << "  " << to_string(p.key) << "\n";
        }
      j["points"] = pts;
      emit(o, j, text.str());
    } else if (*build) {
      auto g = build_graph(ctx, parse_variant(variant));
      bool wrote = false;
      if (dot_opt->count()) {
        write_to(dot_path, to_dot(g));
        wrote = true;
      }
      if (json_out->count()) {
        write_to(json_path, to_json(g) + "\n");
        wrote = true;
      }
      if (!wrote)
        std::cout << graph_text(g);
    } else if (*sccs) {
      auto g = build_graph(ctx, parse_variant(variant));
      auto s = scc(g);
      j["strongly_connected"] = s.strongly_connected();
      ordered_json comps = ordered_json::array();
      text << (s.strongly_connected() ? "strongly connected" : "not strongly connected") << ", "
           << s.members.size() << " component(s)\n";
      for (std::size_t c = 0; c < s.members.size(); ++c) {
        bool nt = s.nontrivial(g, static_cast<int>(c));
        comps.push_back({{"vertices", names_of(g, s.members[c])}, {"cyclic", nt}});
        text << "  C" << c << (nt ? " " : " (acyclic) ");
        for (int v : s.members[c]) text << g.vertices[v].name() << " ";
        text << "\n";
      }
      ordered_json dag = ordered_json::array();
      for (auto [a, b] : s.dag) {
        dag.push_back({a, b});
        text << "  C" << a << " -> C" << b << "\n";
      }
      j["components"] = comps;
      j["condensation"] = dag;
      emit(o, j, text.str());
    } else if (*verify) {
      if (theorem == "iso" || theorem == "1.3") {
        BaseContext cur = ctx;
        ordered_json steps_j = ordered_json::array();
        auto g_prev = build_graph(cur, Variant::FULL);
        for (int k = 0; k < vsteps; ++k) {
          BaseContext nxt = v_successor(cur);
          auto g_next = build_graph(nxt, Variant::FULL);
          bool iso = check_isomorphic(g_prev, g_next).has_value();
          steps_j.push_back({{"from", to_string(cur.alpha)}, {"to", to_string(nxt.alpha)},
                             {"sizes", {g_prev.size(), g_next.size()}}, {"isomorphic", iso}});
          text << "G(" << to_string(cur.alpha) << ") " << (iso ? "~" : "!~") << " G(" << to_string(nxt.alpha)
               << ")  [" << g_prev.size() << " / " << g_next.size() << " vertices]\n";
          cur = nxt;
          g_prev = std::move(g_next);
        }
        j["isomorphism"] = steps_j;
      } else {
        auto t = tower_decompose(ctx, vsteps);
        ordered_json blocks = ordered_json::array();
        for (std::size_t b = 0; b < t.blocks.size(); ++b) {
          blocks.push_back({{"size", t.blocks[b].size()}, {"vertices", names_of(t.graphs.back(), t.blocks[b])}});
          text << "V" << b + 1 << ": " << t.blocks[b].size() << " vertices\n";
        }
        ordered_json cyc = ordered_json::array();
        for (std::size_t c = 0; c < t.cycle_words.size(); ++c) {
          cyc.push_back(to_string(t.cycle_words[c]));
          text << "C" << c + 2 << " word (" << to_string(t.cycle_words[c]) << ")\n";
        }
        text << "reachability V_j -> V_k iff j <= k: ok\n";
        j["n"] = t.n;
        j["blocks"] = blocks;
        j["cycle_words"] = cyc;
        j["verified"] = true;
      }
      emit(o, j, text.str());
    } else if (*conn) {
      auto r = connectivity_report(ctx);
      j = {{"strongly_connected", r.direct},
           {"reach_criterion", r.p121},
           {"sufficient_condition", r.p125},
           {"tilde1_strongly_connected", r.tilde1_strong},
           {"components", r.components},
           {"unreached", r.unreached}};
      text << "tilde graph strongly connected   " << (r.direct ? "yes" : "no") << "\n"
           << "reached from tilde1              " << (r.p121 ? "yes" : "no") << "\n"
           << "b2 below the middle a_i          " << (r.p125 ? "yes" : "no") << "\n"
           << "tilde1 strongly connected        " << (r.tilde1_strong ? "yes" : "no") << "\n";
      for (const auto& u : r.unreached) text << "  unreached " << u << "\n";
      emit(o, j, text.str());
    } else if (*dim) {
      auto g = build_graph(ctx, parse_variant(dim_variant));
      auto rep = spectral_report(g, ctx);
      j = ordered_json::parse(to_json(rep));
      text << "radius     " << dec(rep.radius.value) << " +- " << static_cast<double>(rep.radius.err) << "\n"
           << "entropy    " << dec(rep.entropy) << "\n"
           << "dimension  " << dec(rep.dimension) << "\n";
      if (per_scc) {
        ordered_json comps = ordered_json::array();
        for (const auto& c : rep.per_scc) {
          comps.push_back({{"vertices", names_of(g, c.vertices)}, {"radius", dec(c.radius)}});
          text << "  radius " << dec(c.radius, 6) << "  ";
          for (int v : c.vertices) text << g.vertices[v].name() << " ";
          text << "\n";
        }
        j["scc"] = comps;
      }
      if (ctx.cls == BaseClass::IN_CLOSURE_U_NOT_U && dim_variant == "tilde") {
        auto cd = component_dimensions(ctx);
        j["tilde1_radius"] = dec(cd.tilde1_radius);
        j["t110_hypothesis"] = cd.t110_hypothesis;
        text << "tilde1 side radius " << dec(cd.tilde1_radius) << ", dominates: "
             << (cd.t110_hypothesis ? "yes" : "no") << "\n";
      }
      emit(o, j, text.str());
    } else if (*count) {
      auto x = AlgebraicReal::of_sequence(ctx.field, parse_seq(xs));
      auto r = count_expansions(ctx, x, cap);
      ordered_json ws = ordered_json::array();
      text << "x = " << x.approx(12) << "\n" << r.to_string() << "  (" << r.states << " remainders)\n";
      for (const auto& w : r.witnesses) {
        ws.push_back(to_string(w));
        text << "  " << to_string(w) << "\n";
      }
      j = {{"x", x.approx(12)},
           {"kind", count_kind_name(r.kind)},
           {"count", r.count},
           {"states", r.states},
           {"branching_states", r.branching_states},
           {"expansions", ws}};
      emit(o, j, text.str());
    } else if (*witness) {
      EpSeq c;
      if (cs.empty()) {
        auto d = default_witness_tail(ctx);
        if (!d) throw ValidationError("no admissible tail found within the search bound");
        c = *d;
      } else {
        c = parse_seq(cs);
      }
      auto f = f_family_filter(ctx, c, weak ? Strictness::WEAK : Strictness::STRICT);
      auto w = build_witness_xm(ctx, m, c, weak ? Strictness::WEAK : Strictness::STRICT);
      auto r = count_expansions(ctx, w.value);
      ordered_json ex = ordered_json::array();
      text << "c = " << to_string(c) << (f.starts_with_conj ? "" : "  (does not start with the reflected period)")
           << "\nx_" << m << " = " << w.value.approx(12) << "\n";
      for (const auto& e : w.expansions) {
        ex.push_back(to_string(e));
        text << "  " << to_string(e) << "\n";
      }
      text << "count: " << r.to_string() << "\n";
      j = {{"c", to_string(c)},         {"m", m},
           {"x", w.value.approx(12)},   {"expansions", ex},
           {"count", r.to_string()},    {"reduced_pair", f.reduced_pair},
           {"starts_with_reflected_period", f.starts_with_conj}};
      emit(o, j, text.str());
    } else if (*words) {
      OracleMode md = mode.empty() ? (ctx.cls == BaseClass::IN_CLOSURE_U_NOT_U ? OracleMode::V_PREFIX
                                                                                  : OracleMode::U_PREFIX)
                                   : parse_oracle_mode(mode);
      auto ws = enumerate_admissible_words(ctx, L, md);
      ordered_json arr = ordered_json::array();
      text << ws.size() << " words (" << oracle_mode_name(md) << ")\n";
      for (const auto& w : ws) {
        arr.push_back(to_string(w));
        text << "  " << to_string(w) << "\n";
      }
      j = {{"mode", oracle_mode_name(md)}, {"L", L}, {"count", ws.size()}, {"words", arr}};
      if (compare_graph) {
        auto diff = language_difference(build_graph(ctx, Variant::FULL), ctx, L, md);
        j["graph_equal"] = !diff;
        if (diff) j["first_difference"] = to_string(*diff);
        text << "graph words " << (diff ? "differ at " + to_string(*diff) : std::string("equal")) << "\n";
      }
      emit(o, j, text.str());
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  }
}
