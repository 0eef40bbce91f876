#include "singlat/cli.hpp"

#include "singlat/catalog.hpp"
#include "singlat/classify.hpp"
#include "singlat/dsl.hpp"
#include "singlat/errors.hpp"
#include "singlat/extend.hpp"
#include "singlat/json_io.hpp"
#include "singlat/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace singlat::cli {

namespace {

struct Options {
  std::string input;
  std::string catalog_name;
  std::string format = "text";
  bool verify = false;
  std::optional<int> box;

  std::string vertex;
  std::vector<std::string> edge;
  std::optional<std::int64_t> euler;
};

struct Context {
  GraphDocument doc;
  ResolutionGraph graph;
  bool json = false;
  int box = default_box_factor;
};

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Context load(const Options& o, std::istream& in) {
  if (o.input.empty() == o.catalog_name.empty())
    throw InputError("give exactly one input: a file path, '-' for standard input, or --catalog <name>");
  GraphDocument doc;
  if (!o.catalog_name.empty()) {
    doc = catalog_document(o.catalog_name);
  } else if (o.input == "-") {
    doc = parse(read_all(in));
  } else {
    std::ifstream f(o.input);
    if (!f) throw InputError("cannot open '" + o.input + "'");
    try {
      doc = parse(read_all(f));
    } catch (const InputError& e) {
      throw InputError(o.input + ":" + e.what());
    }
  }

  int box = default_box_factor;
  if (o.box) {
    box = *o.box;
  } else if (const char* env = std::getenv("SINGLAT_BOX"); env && *env) {
    try {
      std::size_t used = 0;
      box = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw InputError(std::string("SINGLAT_BOX must be an integer, got '") + env + "'");
    }
  }
  if (box < 1) throw InputError("box factor must be at least 1");

  ResolutionGraph g = to_graph(doc);
  return Context{std::move(doc), std::move(g), o.format == "json", box};
}

Lattice lattice(const Context& c) {
  if (!is_negative_definite(intersection_matrix(c.graph)))
    throw PreconditionError("intersection matrix is not negative definite");
  return Lattice(c.graph);
}

Json header(const Context& c, const std::string& command) {
  Json j;
  j["schema"] = schema_version;
  j["command"] = command;
  j["graph"] = c.doc.name;
  Json order = Json::array();
  for (const auto& v : c.graph.vertices()) order.push_back(v.id);
  j["vertex_order"] = std::move(order);
  return j;
}

std::string vertex_order(const ResolutionGraph& g) {
  std::string s = "vertex order:";
  for (const auto& v : g.vertices()) s += " " + v.id;
  return s;
}

std::string class_text(const ClassElement& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.coords.size(); ++i) s += (i ? "," : "") + h.coords[i].str();
  return s + "]";
}

std::string group_text(const ClassGroup& cg) {
  if (cg.invariant_factors().empty()) return "0";
  std::string s;
  for (const auto& d : cg.invariant_factors()) s += (s.empty() ? "" : " + ") + ("Z/" + d.str());
  return s;
}

std::string type_text(const SingularityType& t) {
  std::string s = to_string(t.kind);
  if (!t.verdict_confirmed) s += " (consistent-with; resolution not minimal)";
  return s;
}

// Subcommands. Each writes its result and returns an exit code.

int cmd_check(const Context& c, std::ostream& out, std::ostream& err) {
  const bool nd = is_negative_definite(intersection_matrix(c.graph));
  std::optional<SingularityType> t;
  if (nd) t = classify_singularity(Lattice(c.graph));
  if (c.json) {
    Json j = header(c, "check");
    j["well_formed"] = true;
    j["negative_definite"] = nd;
    j["type"] = t ? to_json(*t, c.graph) : Json(nullptr);
    out << dump(j) << '\n';
  } else {
    out << "graph: " << (c.doc.name.empty() ? "(unnamed)" : c.doc.name) << " (" << c.graph.size() << " vertices, "
        << c.graph.edges().size() << " edges)\n";
    out << "well formed: yes\n";
    out << "negative definite: " << (nd ? "yes" : "no") << '\n';
    if (t) {
      out << type_text(*t) << '\n';
      for (const auto& n : t->notes) out << "note: " << n << '\n';
    }
  }
  if (!nd) {
    err << "singlat: intersection matrix is not negative definite\n";
    return precondition_unmet;
  }
  return ok;
}

int cmd_invariants(const Context& c, std::ostream& out) {
  const Lattice lat = lattice(c);
  const ClassGroup cg = class_group(lat);
  const Cycle zmin = fundamental_cycle(lat).end;
  const CanonicalCycle zk = canonical_cycle(lat);
  const Rational chi_zmin = chi(lat, zmin);
  if (c.json) {
    Json j = header(c, "invariants");
    j["determinant"] = lat.determinant().str();
    j["class_group"] = to_json(cg);
    j["zmin"] = to_json(zmin);
    j["zk"] = to_json(zk.cycle);
    j["numerically_gorenstein"] = zk.integral;
    j["chi_zmin"] = to_json(chi_zmin);
    Json duals = Json::array();
    for (std::size_t v = 0; v < c.graph.size(); ++v) {
      const Cycle d = dual_cycle(lat, v);
      duals.push_back(Json{{"vertex", c.graph.vertex(v).id}, {"cycle", to_json(d)}, {"class", to_json(class_of(cg, d))}});
    }
    j["dual_cycles"] = std::move(duals);
    out << dump(j) << '\n';
    return ok;
  }
  out << vertex_order(c.graph) << '\n';
  out << "det(-M) = " << lat.determinant() << '\n';
  out << "H = " << group_text(cg) << " (order " << cg.order() << ")\n";
  out << "Z_min = " << to_string(zmin) << '\n';
  out << "Z_K = " << to_string(zk.cycle) << (zk.integral ? " (integral)" : " (not integral)") << '\n';
  out << "chi(Z_min) = " << to_string(chi_zmin) << '\n';
  for (std::size_t v = 0; v < c.graph.size(); ++v) {
    const Cycle d = dual_cycle(lat, v);
    out << "E*_" << c.graph.vertex(v).id << " = " << to_string(d) << "  class " << class_text(class_of(cg, d)) << '\n';
  }
  return ok;
}

int cmd_sh(const Context& c, std::ostream& out) {
  const Lattice lat = lattice(c);
  const ClassGroup cg = class_group(lat);
  Json rows = Json::array();
  if (!c.json) out << vertex_order(c.graph) << '\n';
  for (const auto& h : cg.elements()) {
    const Cycle r = reduced_rep(cg, h);
    const auto seq = generalized_laufer(lat, r);
    if (c.json) {
      rows.push_back(Json{{"class", to_json(h)}, {"r_h", to_json(r)}, {"s_h", to_json(seq.end)},
                          {"steps", std::to_string(seq.steps.size())}});
    } else {
      out << "h = " << class_text(h) << "  r_h = " << to_string(r) << "  s_h = " << to_string(seq.end)
          << "  steps = " << seq.steps.size() << '\n';
    }
  }
  if (c.json) {
    Json j = header(c, "sh");
    j["class_group"] = to_json(cg);
    j["classes"] = std::move(rows);
    out << dump(j) << '\n';
  }
  return ok;
}

void print_report(const ClassificationReport& r, const ResolutionGraph& g, std::ostream& out) {
  out << vertex_order(g) << '\n';
  out << "type: " << type_text(r.type) << '\n';
  out << "H = " << group_text(r.group) << " (order " << r.group.order() << ")\n";
  out << "Z_min = " << to_string(r.type.zmin) << "  Z_K = " << to_string(r.type.zk) << '\n';
  out << "relation: " << to_string(r.relation) << '\n';
  out << "families:\n";
  for (const auto& f : r.families) {
    out << "  " << f.label << " h = " << class_text(f.h) << "  -c1 = " << to_string(f.chern_class)
        << "  dim = " << f.family_dim;
    if (f.special) out << "  special = " << (*f.special ? "yes" : "no");
    out << "  flat = " << to_string(f.flat_count) << '\n';
    for (const auto& e : f.exceptions) out << "    except: " << e << '\n';
  }
  if (!r.vertices.empty()) {
    out << "vertices:\n";
    for (const auto& row : r.vertices) {
      out << "  " << g.vertex(row.vertex).id << "  m = " << row.multiplicity << "  E* = " << to_string(row.dual)
          << "  s = " << to_string(row.s) << (row.s_is_dual ? " (= E*)" : "");
      if (row.extended_rational)
        out << "  extended(k=" << *row.extended_euler << ") " << (*row.extended_rational ? "rational" : "not rational");
      if (row.special_full) out << "  special full = " << (*row.special_full ? "yes" : "no");
      out << '\n';
    }
  }
  for (const auto& n : r.type.notes) out << "note: " << n << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';
}

int cmd_classify(const Context& c, std::ostream& out) {
  const Lattice lat = lattice(c);
  const ClassificationReport r = classify(lat);
  if (c.json) {
    Json j = header(c, "classify");
    j["report"] = to_json(r, c.graph);
    out << dump(j) << '\n';
  } else {
    print_report(r, c.graph, out);
  }
  return ok;
}

int cmd_special(const Context& c, std::ostream& out) {
  const Lattice lat = lattice(c);
  const auto records = special_full_sheaves(lat);
  ClassificationReport r = full_sheaf_classes_rational(lat);
  if (c.json) {
    Json j = header(c, "special");
    Json recs = Json::array();
    for (const auto& s : records) {
      recs.push_back(Json{{"class", to_json(s.h)},
                          {"s_h", to_json(s.s)},
                          {"pairing_with_zmin", to_json(s.pairing_with_zmin)},
                          {"witness", s.witness ? Json(c.graph.vertex(*s.witness).id) : Json(nullptr)},
                          {"h1", s.h1.str()},
                          {"special", s.special}});
    }
    j["specialness"] = std::move(recs);
    j["vertices"] = to_json(r, c.graph)["vertices"];
    out << dump(j) << '\n';
    return ok;
  }
  out << vertex_order(c.graph) << '\n';
  for (const auto& s : records) {
    out << "h = " << class_text(s.h) << "  s_h = " << to_string(s.s) << "  (-s_h, Z_min) = "
        << to_string(s.pairing_with_zmin) << "  witness = " << (s.witness ? c.graph.vertex(*s.witness).id : "-")
        << "  h1 = " << s.h1 << "  " << (s.special ? "special" : "not special") << '\n';
  }
  out << "vertices:\n";
  for (const auto& row : r.vertices) {
    out << "  " << c.graph.vertex(row.vertex).id << "  m = " << row.multiplicity << "  s = E*: "
        << (row.s_is_dual ? "yes" : "no") << "  extended(k=" << *row.extended_euler
        << "): " << (*row.extended_rational ? "rational" : "not rational")
        << "  special full: " << (*row.special_full ? "yes" : "no") << '\n';
  }
  return ok;
}

int cmd_extend(const Context& c, const Options& o, std::ostream& out) {
  if (o.vertex.empty()) throw InputError("extend needs --vertex <id>");
  const Lattice lat = lattice(c);
  const ExtendedGraph ext = extend_graph(lat, c.graph.index_of(o.vertex), o.euler);
  if (c.json) {
    Json j = header(c, "extend");
    j["vertex"] = o.vertex;
    j["euler"] = std::to_string(ext.euler);
    j["new_vertex"] = ext.graph.vertex(ext.new_vertex).id;
    j["new_multiplicity"] = ext.new_multiplicity.str();
    j["rational"] = ext.rational;
    j["extended_graph"] = to_json(ext.graph);
    out << dump(j) << '\n';
  } else {
    out << serialize(to_document(ext.graph, c.doc.name.empty() ? "" : c.doc.name + "-ext"));
    out << "# euler " << ext.euler << ", new multiplicity " << ext.new_multiplicity << ", "
        << (ext.rational ? "rational" : "not rational") << '\n';
  }
  return ok;
}

int cmd_blowup(const Context& c, const Options& o, std::ostream& out) {
  if (o.vertex.empty() == o.edge.empty()) throw InputError("blowup needs exactly one of --vertex <id> or --edge <u> <v>");
  BlowUpLocus locus = o.edge.empty()
                          ? BlowUpLocus::at_vertex(c.graph.index_of(o.vertex))
                          : BlowUpLocus::at_edge(c.graph.index_of(o.edge[0]), c.graph.index_of(o.edge[1]));
  const Lattice lat = lattice(c);
  const ClassGroup cg = class_group(lat);
  const BlowUp bu = blow_up(c.graph, locus);
  const Lattice up(bu.graph);
  const ClassGroup ucg = class_group(up);

  struct Row {
    ClassElement h;
    Cycle s, pulled, s_up;
  };
  std::vector<Row> rows;
  for (const auto& h : cg.elements()) {
    const Cycle s = s_h(lat, cg, h);
    const Cycle pulled = total_transform(bu.map, s);
    rows.push_back({h, s, pulled, s_h(up, ucg, class_of(ucg, pulled))});
  }

  if (c.json) {
    Json j = header(c, "blowup");
    j["new_vertex"] = bu.graph.vertex(bu.map.new_vertex).id;
    j["blown_up_graph"] = to_json(bu.graph);
    Json rs = Json::array();
    for (const auto& r : rows)
      rs.push_back(Json{{"class", to_json(r.h)},
                        {"s_h", to_json(r.s)},
                        {"total_transform", to_json(r.pulled)},
                        {"s_h_upstairs", to_json(r.s_up)},
                        {"equal", r.pulled == r.s_up}});
    j["transformed"] = std::move(rs);
    out << dump(j) << '\n';
    return ok;
  }
  out << serialize(to_document(bu.graph, c.doc.name.empty() ? "" : c.doc.name + "-blowup"));
  out << "# " << vertex_order(bu.graph) << '\n';
  for (const auto& r : rows)
    out << "# h = " << class_text(r.h) << "  s_h = " << to_string(r.s) << "  total transform = "
        << to_string(r.pulled) << "  s upstairs = " << to_string(r.s_up) << (r.pulled == r.s_up ? "  equal" : "  differ")
        << '\n';
  return ok;
}

int cmd_catalog(const std::string& name, bool json, std::ostream& out) {
  if (name.empty()) {
    if (json) {
      Json j;
      j["schema"] = schema_version;
      j["command"] = "catalog";
      j["names"] = catalog_names();
      j["patterns"] = catalog_patterns();
      out << dump(j) << '\n';
    } else {
      for (const auto& n : catalog_names()) out << n << '\n';
      out << "# patterns: " << catalog_patterns() << '\n';
    }
    return ok;
  }
  const GraphDocument doc = catalog_document(name);
  if (json) {
    Json j;
    j["schema"] = schema_version;
    j["command"] = "catalog";
    j["graph"] = doc.name;
    j["definition"] = to_json(to_graph(doc));
    out << dump(j) << '\n';
  } else {
    out << serialize(doc);
  }
  return ok;
}

int run_verification(const Context& c, std::ostream& out, bool standalone) {
  const Transcript t = verify_all(c.graph, c.box);
  if (c.json) {
    Json j = standalone ? header(c, "verify") : Json::object();
    j["verification"] = to_json(t);
    out << dump(j) << '\n';
  } else {
    out << (standalone ? "" : "verification:\n") << t.to_text();
  }
  return t.passed() ? ok : internal_failure;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "graph file, or - for standard input");
  sub->add_option("--catalog", o.catalog_name, "use a built-in graph");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--verify", o.verify, "run the brute-force cross-checks as well");
  sub->add_option("--box", o.box, "oracle box factor B (default 3, or SINGLAT_BOX)")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice invariants and full-sheaf classification of resolution graphs", "singlat"};
  app.require_subcommand(1);
  Options o;
  std::string catalog_arg;

  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {"check", "well-formedness, negative definiteness and singularity type"},
      {"invariants", "det, H, Z_min, Z_K, chi(Z_min) and the dual cycles"},
      {"sh", "r_h, s_h and Laufer sequence lengths for every class"},
      {"classify", "rank-one full sheaves by Chern class, with flatness"},
      {"special", "specialness and the per-vertex table (rational graphs)"},
      {"extend", "glue a new vertex to --vertex"},
      {"blowup", "blow up a vertex or an edge and transform s_h"},
      {"verify", "run every brute-force cross-check"},
  };
  std::vector<CLI::App*> commands;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_input(sub, o);
    commands.push_back(sub);
  }
  app.get_subcommand("extend")->add_option("--vertex", o.vertex, "vertex id")->required();
  app.get_subcommand("extend")->add_option("--euler", o.euler, "euler number of the new vertex");
  app.get_subcommand("blowup")->add_option("--vertex", o.vertex, "blow up a generic point of this vertex");
  app.get_subcommand("blowup")->add_option("--edge", o.edge, "blow up the intersection point u v")->expected(2);
  CLI::App* cat = app.add_subcommand("catalog", "list built-in graphs or print one");
  cat->add_option("name", catalog_arg, "graph name");
  cat->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (cat->parsed()) return cmd_catalog(catalog_arg, o.format == "json", out);
    const Context c = load(o, in);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "verify") return run_verification(c, out, true);

    int code = ok;
    if (name == "check") code = cmd_check(c, out, err);
    else if (name == "invariants") code = cmd_invariants(c, out);
    else if (name == "sh") code = cmd_sh(c, out);
    else if (name == "classify") code = cmd_classify(c, out);
    else if (name == "special") code = cmd_special(c, out);
    else if (name == "extend") code = cmd_extend(c, o, out);
    else if (name == "blowup") code = cmd_blowup(c, o, out);
    if (code == ok && o.verify) {
      code = run_verification(c, out, false);
      if (code != ok) err << "singlat: verification failed\n";
    }
    return code;
  } catch (const InputError& e) {
    err << "singlat: error: " << e.what() << '\n';
    return input_error;
  } catch (const DomainError& e) {
    err << "singlat: error: " << e.what() << '\n';
    return input_error;
  } catch (const PreconditionError& e) {
    err << "singlat: precondition unmet: " << e.what() << '\n';
    return precondition_unmet;
  } catch (const InternalError& e) {
    err << "singlat: internal consistency failure: " << e.what() << '\n';
    return internal_failure;
  }
}

}  // namespace singlat::cli
