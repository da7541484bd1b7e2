#include "nilfilt_app/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilfilt/catalog.hpp"
#include "nilfilt/group_io.hpp"
#include "nilfilt/homology.hpp"
#include "nilfilt/nilposet.hpp"
#include "nilfilt/tc.hpp"
#include "nilfilt_app/verify.hpp"

namespace nilfilt::cli {

namespace {

using Json = nlohmann::ordered_json;

int parse_q(const std::string& text) {
  if (text == "inf" || text == "infinity") return kQInfinity;
  std::size_t used = 0;
  int q = 0;
  try {
    q = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || q < 2) throw ValidationError("--q expects an integer >= 2 or 'inf', got '" + text + "'");
  return q;
}

Json q_json(int q) { return q == kQInfinity ? Json("inf") : Json(q); }

FiniteGroup load_group(const QuerySpec& s) {
  if (!s.file.empty() && !s.group.empty()) throw ValidationError("give either --group or --file, not both");
  if (!s.file.empty()) return load_group_file(s.file);
  if (s.group.empty()) throw ValidationError("a group is required (--group NAME or --file PATH)");
  return builtin_group(s.group);
}

std::string labels_of(const FiniteGroup& g, const std::vector<Elem>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + g.label(xs[i]);
  return s;
}

Json subgroup_json(const Subgroup& h) {
  Json j;
  j["order"] = h.order();
  j["elements"] = h.elements();
  j["generators"] = h.generators();
  return j;
}

void check_format(const QuerySpec& s) {
  if (s.format != "table" && s.format != "json" && s.format != "tsv")
    throw ValidationError("--format must be table, json or tsv");
}

// lambda, mu, scount, reporbits
void count_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const int q = parse_q(s.q);
  const Variant v{s.p};
  const CountOptions opt{s.jobs, nullptr};
  Count value = 0;
  int size = s.n;
  std::string quantity;
  if (s.command == "lambda") {
    value = count_hom(g, s.n, q, v, opt);
    quantity = "lambda";
  } else if (s.command == "mu") {
    if (s.k < 1) throw ValidationError("--k must be at least 1");
    value = mu_count(g, s.k, q, v, opt);
    size = s.k;
    quantity = "mu";
  } else if (s.command == "scount") {
    value = filtration_count(g, s.n, s.j, q, v, opt);
    quantity = "S_" + std::to_string(s.j);
  } else {
    value = rep_orbit_count(g, s.n, q, v, opt);
    quantity = "reporbits";
  }
  if (s.format == "json") {
    Json j;
    j["group"] = g.name();
    j["q"] = q_json(q);
    j["variant"] = variant_name(v);
    j["n_or_k"] = size;
    j["quantity"] = quantity;
    j["value"] = value;
    out << j.dump() << "\n";
  } else if (s.format == "tsv") {
    out << "group\tq\tvariant\tn_or_k\tquantity\tvalue\n"
        << g.name() << "\t" << q_name(q) << "\t" << variant_name(v) << "\t" << size << "\t" << quantity << "\t" << value
        << "\n";
  } else {
    out << value << "\n";
  }
}

void group_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const auto z = center(g);
  const auto cc = conjugacy_classes(g);
  const auto ab = abelian_invariants(Subgroup::whole(g));
  const auto tc = is_tc(g);
  const int stab = stabilization_exponent(g);
  if (s.format == "json") {
    Json j;
    j["name"] = g.name();
    j["order"] = g.order();
    j["abelian"] = g.is_abelian();
    j["center_order"] = z.order();
    j["classes"] = cc.classes.size();
    j["abelianization"] = ab.to_string();
    j["tc"] = tc.is_tc;
    j["stabilization_exponent"] = stab;
    out << j.dump() << "\n";
    return;
  }
  const char* sep = s.format == "tsv" ? "\t" : ": ";
  out << "name" << sep << g.name() << "\n"
      << "order" << sep << g.order() << "\n"
      << "abelian" << sep << (g.is_abelian() ? "yes" : "no") << "\n"
      << "center_order" << sep << z.order() << "\n"
      << "classes" << sep << cc.classes.size() << "\n"
      << "abelianization" << sep << ab.to_string() << "\n"
      << "tc" << sep << (tc.is_tc ? "yes" : "no") << "\n"
      << "stabilization_exponent" << sep << stab << "\n";
}

void family_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const int q = parse_q(s.q);
  const auto fam = nil_family(g, q, Variant{s.p});
  auto is_max = [&](const Subgroup& h) { return std::find(fam.maximal.begin(), fam.maximal.end(), h) != fam.maximal.end(); };
  if (s.format == "json") {
    Json j;
    j["group"] = g.name();
    j["q"] = q_json(q);
    j["members"] = Json::array();
    for (const auto& h : fam.members) {
      Json m = subgroup_json(h);
      m["maximal"] = is_max(h);
      j["members"].push_back(m);
    }
    out << j.dump() << "\n";
    return;
  }
  if (s.format == "tsv") out << "index\torder\tmaximal\tgenerators\n";
  else out << "N_" << q_name(q) << "(" << g.name() << "): " << fam.members.size() << " members, " << fam.maximal.size()
           << " maximal\n";
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& h = fam.members[i];
    if (s.format == "tsv")
      out << i << "\t" << h.order() << "\t" << (is_max(h) ? 1 : 0) << "\t" << labels_of(g, h.generators()) << "\n";
    else
      out << "  order " << h.order() << (is_max(h) ? "  maximal" : "") << "  <" << labels_of(g, h.generators())
          << ">\n";
  }
}

void poset_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const int q = parse_q(s.q);
  const auto gg = poset_graph(g, q, Variant{s.p});
  if (s.format == "tsv") {
    out << group_graph_tsv(gg);
    return;
  }
  if (s.format == "json") {
    Json j;
    j["group"] = g.name();
    j["q"] = q_json(q);
    j["vertices"] = Json::array();
    for (const auto& v : gg.vertices) j["vertices"].push_back(subgroup_json(v));
    j["maximal"] = gg.maximal;
    j["morphisms"] = gg.morphisms;
    j["hasse"] = gg.hasse;
    j["is_tree"] = gg.is_tree;
    out << j.dump() << "\n";
    return;
  }
  out << "P_" << q_name(q) << "(" << g.name() << "): " << gg.vertices.size() << " vertices, " << gg.hasse.size()
      << " edges, " << (gg.is_tree ? "tree" : "not a tree") << "\n";
  for (std::size_t v = 0; v < gg.vertices.size(); ++v) {
    const bool m = std::find(gg.maximal.begin(), gg.maximal.end(), v) != gg.maximal.end();
    out << "  v" << v << "  order " << gg.vertices[v].order() << (m ? "  maximal" : "") << "\n";
  }
  for (auto [a, b] : gg.hasse) out << "  v" << a << " -> v" << b << "\n";
}

void tc_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const auto check = is_tc(g);
  if (!check.is_tc) {
    if (s.format == "json") {
      Json j;
      j["group"] = g.name();
      j["tc"] = false;
      j["witness"] = g.label(*check.witness);
      out << j.dump() << "\n";
    } else {
      out << "not TC; witness g=" << g.label(*check.witness) << "\n";
    }
    return;
  }
  const auto r = tc_invariants(g);
  const std::string chi = std::to_string(r.chi.numerator()) + "/" + std::to_string(r.chi.denominator());
  if (s.format == "json") {
    Json j;
    j["group"] = g.name();
    j["tc"] = true;
    j["center_order"] = r.center_order;
    j["k"] = r.k;
    j["N_G"] = r.n_g;
    j["chi"] = chi;
    j["cover"] = Json::array();
    for (std::size_t i = 0; i < r.k; ++i)
      j["cover"].push_back({{"representative", g.label(r.cover.representatives[i])},
                            {"order", r.cover.subgroups[i].order()},
                            {"type", abelian_decomposition(r.cover.subgroups[i]).to_string()}});
    j["wedge"] = Json::array();
    for (const auto& w : r.wedge)
      j["wedge"].push_back({{"prime", w.prime}, {"sylow", w.sylow.to_string()}, {"multiplicity", w.multiplicity}});
    out << j.dump() << "\n";
    return;
  }
  out << "TC" << (check.note.empty() ? "" : " (" + check.note + ")") << "\n"
      << "center order: " << r.center_order << "\n"
      << "k: " << r.k << "\n"
      << "N_G: " << r.n_g << "\n"
      << "chi(G(2)): " << chi << "\n";
  for (std::size_t i = 0; i < r.k; ++i)
    out << "  C(" << g.label(r.cover.representatives[i]) << ")  order " << r.cover.subgroups[i].order() << "  "
        << abelian_decomposition(r.cover.subgroups[i]).to_string() << "\n";
  for (const auto& w : r.wedge) out << "  wedge " << w.multiplicity << " x B(" << w.sylow.to_string() << ")\n";
}

void colim_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const int q = parse_q(s.q);
  const auto p = colimit_presentation(g, q, Variant{s.p});
  if (s.format == "json") {
    Json j;
    j["group"] = g.name();
    j["q"] = q_json(q);
    j["generators"] = p.generators;
    j["relators"] = p.relators;
    j["abelianization"] = p.abelianization.to_string();
    j["surjects"] = p.surjects;
    out << j.dump() << "\n";
    return;
  }
  out << presentation_text(p) << "abelianization: " << p.abelianization.to_string() << "\n"
      << "surjects: " << (p.surjects ? "yes" : "no") << "\n";
}

void character_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const auto f = character_M2(g);
  if (s.format == "json") {
    Json j;
    j["group"] = g.name();
    j["classes"] = Json::array();
    for (std::size_t c = 0; c < f.values.size(); ++c)
      j["classes"].push_back({{"representative", g.label(f.classes.representatives[c])},
                              {"size", f.classes.classes[c].size()},
                              {"value", f.values[c]}});
    j["kernel"] = f.kernel;
    out << j.dump() << "\n";
    return;
  }
  if (s.format == "tsv") out << "representative\tsize\tvalue\n";
  for (std::size_t c = 0; c < f.values.size(); ++c)
    out << (s.format == "tsv" ? "" : "  ") << g.label(f.classes.representatives[c]) << "\t"
        << f.classes.classes[c].size() << "\t" << f.values[c] << "\n";
  if (s.format != "tsv") out << "kernel: {" << labels_of(g, f.kernel) << "}\n";
}

void print_homology(const QuerySpec& s, const HomologyResult& r, std::ostream& out) {
  if (s.format == "json") {
    out << homology_json(r);
  } else if (s.format == "tsv") {
    out << "group\tq\tspace\ti\trank\ttorsion\tmethod\n"
        << r.group << "\t" << q_name(r.q) << "\t" << space_name(r.space) << "\t" << r.degree << "\t" << r.value.rank
        << "\t";
    for (std::size_t t = 0; t < r.value.torsion.size(); ++t) out << (t ? "," : "") << r.value.torsion[t];
    out << "\t" << method_name(r.method) << "\n";
  } else {
    out << "H_" << r.degree << "(" << space_name(r.space) << "(" << q_name(r.q) << "," << r.group
        << ")) = " << r.value.to_string() << "  [" << method_name(r.method) << "]\n";
  }
}

void homology_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const int q = parse_q(s.q);
  const Variant v{s.p};
  if (s.space != "B" && s.space != "E") throw ValidationError("--space must be B or E");
  const Space space = s.space == "B" ? Space::B : Space::E;
  const std::string method = s.command == "h1-iq" ? "iq" : s.method;
  if (method == "direct") {
    if (s.i < 0) throw ValidationError("--i must be nonnegative");
    const int dmax = s.dmax < 0 ? s.i + 1 : s.dmax;
    if (dmax <= s.i) throw ValidationError("--dmax must exceed --i");
    print_homology(s, homology(build_chain_complex(g, q, space, dmax, v), s.i), out);
    return;
  }
  if (space != Space::B) throw ValidationError("method '" + method + "' computes homology of B only");
  if (method == "iq") {
    if (s.command == "homology" && s.i != 1) throw ValidationError("the I_q presentation gives H_1 only");
    print_homology(s, h1_via_Iq(g, q, v), out);
  } else if (method == "seq3") {
    if (q != 2 || s.i != 1 || s.p != 0) throw ValidationError("sequence III gives H_1(B(2,G)) only");
    print_homology(s, tc_h1_via_sequence_III(g), out);
  } else if (method == "wedge") {
    if (q != 2 || s.p != 0) throw ValidationError("the wedge formula applies to B(2,G) only");
    print_homology(s, tc_homology_via_wedge(g, s.i), out);
  } else {
    throw ValidationError("--method must be direct, iq, seq3 or wedge");
  }
}

void h1_map_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  const int q = parse_q(s.q);
  const auto m = induced_h1_map(g, q, Variant{s.p});
  if (s.format == "json") {
    Json j;
    j["group"] = g.name();
    j["q"] = q_json(q);
    j["h1_B"] = m.h1_b.to_string();
    j["cokernel"] = m.cokernel.to_string();
    j["abelianization"] = m.abelianization.to_string();
    j["matches_abelianization"] = m.matches_abelianization;
    j["feit_thompson_flag"] = m.feit_thompson_flag;
    j["map_rows"] = m.map.rows();
    out << j.dump() << "\n";
    return;
  }
  out << "H_1(B) = " << m.h1_b.to_string() << "\n"
      << "cokernel = " << m.cokernel.to_string() << "\n"
      << "G^ab = " << m.abelianization.to_string() << "\n"
      << "cokernel matches G^ab: " << (m.matches_abelianization ? "yes" : "no") << "\n"
      << "odd order and not onto: " << (m.feit_thompson_flag ? "yes" : "no") << "\n";
}

int verify_query(const QuerySpec& s, std::ostream& out) {
  verify::Options opt;
  opt.slow = s.slow;
  opt.jobs = s.jobs;
  opt.seed = s.seed;
  bool ok = true;
  for (int id : verify::suite_criteria(s.suite)) {
    const auto c = verify::run_criterion(id, opt);
    out << verify::format_criterion(c) << std::flush;
    ok = ok && c.pass;
  }
  return ok ? kOk : kVerifyFailed;
}

void export_query(const QuerySpec& s, const FiniteGroup& g, std::ostream& out) {
  if (s.out.empty()) out << group_to_json(g);
  else save_group_file(g, s.out);
}

}  // namespace

int run_query(const QuerySpec& s, std::ostream& out, std::ostream& err) {
  try {
    check_format(s);
    if (s.jobs == 0) throw ValidationError("--jobs must be at least 1");
    const auto& c = s.command;
    if (c == "verify-paper") return verify_query(s, out);
    static const char* const known[] = {"group", "lambda", "mu",   "scount",    "stab",     "reporbits",
                                        "family", "poset", "tc",   "colim",     "character", "homology",
                                        "h1-iq", "h1-map", "export"};
    if (std::find(std::begin(known), std::end(known), c) == std::end(known)) {
      err << "unknown command '" << c << "'\n";
      return kUnknownCommand;
    }
    const FiniteGroup g = load_group(s);
    if (c == "group") group_query(s, g, out);
    else if (c == "lambda" || c == "mu" || c == "scount" || c == "reporbits") count_query(s, g, out);
    else if (c == "stab") {
      const int n = stabilization_exponent(g);
      if (s.format == "json") out << Json{{"group", g.name()}, {"stabilization_exponent", n}}.dump() << "\n";
      else out << n << "\n";
    } else if (c == "family") family_query(s, g, out);
    else if (c == "poset") poset_query(s, g, out);
    else if (c == "tc") tc_query(s, g, out);
    else if (c == "colim") colim_query(s, g, out);
    else if (c == "character") character_query(s, g, out);
    else if (c == "homology" || c == "h1-iq") homology_query(s, g, out);
    else if (c == "h1-map") h1_map_query(s, g, out);
    else export_query(s, g, out);
    return kOk;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  QuerySpec s;
  if (const char* env = std::getenv("NILFILT_JOBS")) {
    try {
      s.jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "invalid input: NILFILT_JOBS must be a positive integer\n";
      return kValidation;
    }
  }

  CLI::App app{"Invariants of the nilpotent filtration B(2,G) c B(3,G) c ... c BG of a finite group", "nilfilt"};
  app.require_subcommand(1);

  auto group_opts = [&](CLI::App* sub) {
    sub->add_option("--group,-g", s.group, "builtin group, e.g. A5, Q8, D6, SL2(8), Z2xZ4");
    sub->add_option("--file,-f", s.file, "group file (JSON)");
    sub->add_option("--format", s.format, "table, json or tsv");
  };
  auto bound_opts = [&](CLI::App* sub) {
    sub->add_option("--q", s.q, "nilpotency bound: integer >= 2 or inf");
    sub->add_option("--p", s.p, "use the p-descending central series");
  };
  auto jobs_opt = [&](CLI::App* sub) { sub->add_option("--jobs", s.jobs, "worker threads (default NILFILT_JOBS or 1)"); };

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"group", "summary of a group"},
      {"lambda", "lambda_n(q,G): number of admissible n-tuples"},
      {"mu", "mu_k(q,G): admissible k-tuples without identity entries"},
      {"scount", "|S_n(j,q,G)|: admissible n-tuples with at least j identity entries"},
      {"stab", "stabilization exponent"},
      {"reporbits", "conjugation orbits on admissible n-tuples"},
      {"family", "subgroups of class < q"},
      {"poset", "graph of maximal class-<q subgroups and their intersections"},
      {"tc", "transitively commutative test and invariants"},
      {"colim", "presentation of the colimit group G(q)"},
      {"character", "character of G on H_1(E(2,G))"},
      {"homology", "integral homology of B(q,G) or E(q,G)"},
      {"h1-iq", "H_1(B(q,G)) as Z[G]/I_q(G)"},
      {"h1-map", "cokernel of H_1(E(q,G)) -> H_1(B(q,G))"},
      {"verify-paper", "run the built-in verification suites"},
      {"export", "write a group file"},
  };
  for (const auto& sd : subs) {
    CLI::App* sub = app.add_subcommand(sd.name, sd.help);
    sub->callback([&s, name = std::string(sd.name)] { s.command = name; });
    const std::string n = sd.name;
    if (n == "verify-paper") {
      sub->add_option("suite", s.suite, "counts, homology, tc or all");
      sub->add_flag("--slow", s.slow, "include long direct-SNF cross-checks");
      sub->add_option("--seed", s.seed, "seed for randomized checks");
      jobs_opt(sub);
      continue;
    }
    group_opts(sub);
    if (n == "lambda" || n == "scount" || n == "reporbits") sub->add_option("--n", s.n, "tuple length");
    if (n == "scount") sub->add_option("--j", s.j, "minimum number of identity entries");
    if (n == "mu") sub->add_option("--k", s.k, "tuple length");
    if (n == "lambda" || n == "mu" || n == "scount" || n == "reporbits") jobs_opt(sub);
    if (n == "lambda" || n == "mu" || n == "scount" || n == "reporbits" || n == "family" || n == "poset" ||
        n == "colim" || n == "homology" || n == "h1-iq" || n == "h1-map")
      bound_opts(sub);
    if (n == "homology") {
      sub->add_option("--space", s.space, "B or E");
      sub->add_option("--i", s.i, "homological degree");
      sub->add_option("--dmax", s.dmax, "top degree of the chain complex (default i+1)");
      sub->add_option("--method", s.method, "direct, iq, seq3 or wedge");
    }
    if (n == "export") sub->add_option("--out,-o", s.out, "output path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (argc >= 2 && argv[1][0] != '-') {
      bool known = false;
      for (const auto& sd : subs) known = known || std::string(sd.name) == argv[1];
      if (!known) {
        err << "unknown command '" << argv[1] << "'\n";
        return kUnknownCommand;
      }
    }
    if (argc < 2) {
      app.exit(e, out, err);
      return kUnknownCommand;
    }
    app.exit(e, out, err);
    return kValidation;
  }
  return run_query(s, out, err);
}

}  // namespace nilfilt::cli
