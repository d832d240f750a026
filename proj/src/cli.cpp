#include "smallcover/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "smallcover/abelian.hpp"
#include "smallcover/charmap.hpp"
#include "smallcover/cover.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/homcount.hpp"
#include "smallcover/minimal.hpp"
#include "smallcover/morse.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/presentation.hpp"

namespace smallcover {

namespace {

using nlohmann::ordered_json;

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << h;
  return os.str();
}

std::string slurp(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream os;
    os << stdin_stream.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& data, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write file '" + path + "'");
  f << data;
}

ordered_json abelian_json(const AbelianInvariants& inv) {
  ordered_json j;
  j["free_rank"] = inv.free_rank;
  auto t = ordered_json::array();
  for (const mpz_class& d : inv.torsion) {
    if (d.fits_slong_p())
      t.push_back(d.get_si());
    else
      t.push_back(d.get_str());
  }
  j["torsion"] = t;
  j["pretty"] = inv.to_string();
  return j;
}

// Everything a subcommand may have loaded or derived, for the RunReport.
struct Session {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::optional<Polytope> polytope;
  std::optional<CharMap> colors;
  std::optional<VertexOrder> order;
  ordered_json inputs = ordered_json::object();
  ordered_json extras = ordered_json::object();

  void note_input(const std::string& key, const std::string& text, const std::string& src) {
    inputs[key] = {{"digest", fnv1a64(text)}, {"source", src}};
  }

  // input may be a polytope file or a pipeline bundle carrying colors/order
  void load_polytope(const std::string& path) {
    std::string text = slurp(path, in);
    note_input("polytope", text, path == "-" ? "stdin" : "file");
    polytope = parse_polytope(text);
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("colors")) {
      colors = parse_charmap(text);
      note_input("colors", text, "bundle");
    }
    if (j.is_object() && j.contains("order")) {
      order = parse_order(text, *polytope);
      note_input("order", text, "bundle");
    }
  }

  void load_colors(const std::string& path) {
    if (path.empty()) return;
    std::string text = slurp(path, in);
    note_input("colors", text, "file");
    colors = parse_charmap(text);
  }

  void load_order(const std::string& path) {
    if (path.empty()) return;
    std::string text = slurp(path, in);
    note_input("order", text, "file");
    order = parse_order(text, *polytope);
  }

  const CharMap& need_colors() {
    if (!colors) throw ValidationError("no coloring supplied (use --colors)");
    require_valid_charmap(*polytope, *colors);
    return *colors;
  }

  const VertexOrder& need_order() {
    if (!order) {
      order = default_order(*polytope);
      note_input("order", order_to_json(*order), "generated");
    }
    return *order;
  }

  int finish(const std::string& command, const std::string& text_output) {
    if (!json) {
      out << text_output;
      return 0;
    }
    ordered_json rep;
    rep["command"] = command;
    rep["inputs"] = inputs;
    if (polytope) {
      auto f = polytope->f_vector();
      auto h = polytope->h_vector();
      rep["f_vector"] = f;
      rep["h_vector"] = h;
      rep["flag"] = is_flag(*polytope);
      rep["pogorelov"] = is_pogorelov(*polytope);
      if (colors) rep["orientable"] = is_orientable(*polytope, *colors);
      GenusReport g = heegaard_report(*polytope);
      rep["genus"] = {{"face_handlebody", g.face_handlebody},
                      {"skeleton_handlebody", g.skeleton_handlebody},
                      {"reduced_genus", g.reduced_genus},
                      {"minimal_genus", g.minimal_genus}};
    }
    for (auto& [k, v] : extras.items()) rep[k] = v;
    if (timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      rep["timing_ms"] = ms;
    }
    out << rep.dump(2) << "\n";
    return 0;
  }
};

ordered_json presentation_json(const std::string& method, const Presentation& pres,
                               const AbelianInvariants& inv) {
  ordered_json j;
  j["method"] = method;
  j["generators"] = pres.gens;
  auto rels = ordered_json::array();
  std::istringstream lines(format_presentation(pres));
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind("rel:", 0) == 0) rels.push_back(line.substr(5));
  j["relators"] = rels;
  j["abelianization"] = abelian_json(inv);
  return j;
}

struct MethodResult {
  Presentation pres;
  std::string certificate;  // minimal only
  ordered_json comments = ordered_json::array();
};

MethodResult run_method(Session& s, const std::string& method, int v0_flag,
                        bool do_simplify) {
  const Polytope& p = *s.polytope;
  const CharMap& lam = s.need_colors();
  MethodResult res;
  if (method == "cw") {
    const VertexOrder& ord = s.need_order();
    res.pres = cw_presentation(p, lam, morse_data(p, ord).tree_edges(), &ord);
  } else if (method == "wu-yu") {
    const VertexOrder& ord = s.need_order();
    int v0 = v0_flag >= 0 ? v0_flag : ord.source();
    res.pres = wu_yu_presentation(p, lam, v0);
  } else if (method == "minimal") {
    const VertexOrder& ord = s.need_order();
    MinimalPresentation mp = minimal_presentation(p, lam, ord);
    res.pres = mp.pres;
    res.certificate = to_string(mp.certificate.level());
  } else {
    throw ValidationError("unknown method '" + method + "'");
  }
  if (do_simplify) {
    SimplifyResult sr = simplify(res.pres);
    res.pres = sr.pres;
    if (sr.capped) res.comments.push_back("simplification stopped at the growth cap");
  }
  return res;
}

// presentation from either a presentation-text input or a polytope pipeline
Presentation presentation_input(Session& s, const std::string& input,
                                const std::string& colors_path,
                                const std::string& order_path, std::string method) {
  std::string text = slurp(input, s.in);
  auto first = text.find_first_not_of(" \t\r\n");
  bool is_json = first != std::string::npos && text[first] == '{';
  if (!is_json) {
    s.note_input("presentation", text, input == "-" ? "stdin" : "file");
    return parse_presentation(text);
  }
  s.note_input("polytope", text, input == "-" ? "stdin" : "file");
  s.polytope = parse_polytope(text);
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_object() && j.contains("colors")) s.colors = parse_charmap(text);
  if (j.is_object() && j.contains("order")) s.order = parse_order(text, *s.polytope);
  s.load_colors(colors_path);
  s.load_order(order_path);
  if (method.empty()) method = "minimal";
  return run_method(s, method, -1, false).pres;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int command_gen(Session& s, const std::string& shape, const std::vector<int>& truncate,
                const std::string& output) {
  Polytope p = build_shape(shape);
  for (int v : truncate) p = truncate_vertex(p, v);
  s.polytope = p;
  std::string js = polytope_to_json(p);
  s.note_input("polytope", js, "generated");
  if (s.json) return s.finish("gen", "");
  emit(output, js + "\n", s.out);
  return 0;
}

int command_validate(Session& s) {
  const Polytope& p = *s.polytope;  // parsing already validated it
  std::ostringstream os;
  auto f = p.f_vector();
  os << "polytope ok: f = (" << f[0] << ", " << f[1] << ", " << f[2] << ")\n";
  int bad = 0;
  if (s.colors) {
    auto viol = charmap_violations(p, *s.colors);
    for (const auto& v : viol) os << "colors: " << v << "\n";
    if (viol.empty())
      os << "colors ok: " << (is_orientable(p, *s.colors) ? "orientable" : "nonorientable")
         << "\n";
    bad += static_cast<int>(viol.size());
  }
  if (s.order) {
    os << "order ok\n";  // parse_order validated it
  }
  s.extras["valid"] = bad == 0;
  int rc = s.finish("validate", os.str());
  return bad ? 1 : rc;
}

int command_fvector(Session& s) {
  auto f = s.polytope->f_vector();
  auto h = s.polytope->h_vector();
  std::ostringstream os;
  os << "f-vector: (" << f[0] << ", " << f[1] << ", " << f[2] << ")\n";
  os << "h-vector: (" << h[0] << ", " << h[1] << ", " << h[2] << ", " << h[3] << ")\n";
  return s.finish("fvector", os.str());
}

int command_belts(Session& s, int k) {
  auto belts = find_belts(*s.polytope, k);
  std::ostringstream os;
  os << belts.size() << " " << k << "-belt" << (belts.size() == 1 ? "" : "s") << "\n";
  auto arr = ordered_json::array();
  for (const Belt& b : belts) {
    os << "belt:";
    for (int f : b.facets) os << " " << f;
    os << "\n";
    arr.push_back(b.facets);
  }
  s.extras["belts"] = {{"k", k}, {"count", belts.size()}, {"cycles", arr}};
  return s.finish("belts", os.str());
}

int command_color(Session& s, const std::string& palette_str, const std::string& output) {
  std::vector<Gf2> palette;
  for (const std::string& t : split_list(palette_str)) {
    int c = std::stoi(t);
    if (c < 1 || c > 7) throw ValidationError("palette entries must be 1..7");
    palette.push_back(static_cast<Gf2>(c));
  }
  auto found = find_proper_colorings(*s.polytope, palette, 1);
  if (found.empty()) {
    s.err << "error: no proper coloring with palette {" << palette_str << "}\n";
    return 1;
  }
  s.colors = found.front();
  ordered_json bundle = ordered_json::parse(polytope_to_json(*s.polytope));
  ordered_json wrapped;
  wrapped["polytope"] = bundle;
  wrapped["colors"] = std::vector<int>(s.colors->colors.begin(), s.colors->colors.end());
  if (s.order) wrapped["order"] = s.order->rank;
  s.extras["colors"] = wrapped["colors"];
  if (s.json) return s.finish("color", "");
  emit(output, wrapped.dump() + "\n", s.out);
  return 0;
}

int command_present(Session& s, const std::string& method, int v0, bool do_simplify,
                    const std::string& output) {
  MethodResult res = run_method(s, method, v0, do_simplify);
  AbelianInvariants inv = abelianization(res.pres);
  std::ostringstream os;
  os << "# method: " << method << "\n";
  if (!res.certificate.empty()) os << "# certificate: " << res.certificate << "\n";
  os << format_presentation(res.pres);
  ordered_json pj = presentation_json(method, res.pres, inv);
  if (!res.certificate.empty()) pj["certificate"] = res.certificate;
  s.extras["presentations"] = ordered_json::array({pj});
  if (s.json) return s.finish("present", "");
  emit(output, os.str(), s.out);
  return 0;
}

int command_h1(Session& s, const std::string& input, const std::string& colors_path,
               const std::string& order_path, const std::string& method) {
  Presentation pres = presentation_input(s, input, colors_path, order_path, method);
  AbelianInvariants inv = abelianization(pres);
  s.extras["abelianization"] = abelian_json(inv);
  return s.finish("h1", inv.to_string() + "\n");
}

int command_invariants(Session& s, const std::string& input, const std::string& colors_path,
                       const std::string& order_path, const std::string& method,
                       const std::string& targets, unsigned long long cap) {
  Presentation pres = presentation_input(s, input, colors_path, order_path, method);
  std::ostringstream os;
  ordered_json homs = ordered_json::object();
  for (const std::string& t : split_list(targets)) {
    FiniteGroupTable g = group_by_name(t);
    try {
      unsigned long long n = count_homs(pres, g, cap);
      os << "hom_count " << g.name << " = " << n << "\n";
      homs[g.name] = n;
    } catch (const CapExceeded&) {
      os << "hom_count " << g.name << " = cap exceeded\n";
      homs[g.name] = nullptr;
    }
  }
  s.extras["hom_counts"] = homs;
  return s.finish("invariants", os.str());
}

int command_compare(Session& s, unsigned long long cap) {
  const Polytope& p = *s.polytope;
  const CharMap& lam = s.need_colors();
  const VertexOrder& ord = s.need_order();

  MinimalPresentation mp = minimal_presentation(p, lam, ord);
  Presentation cw = cw_presentation(p, lam, morse_data(p, ord).tree_edges(), &ord);
  Presentation wy = wu_yu_presentation(p, lam, ord.source());

  AbelianInvariants im = mp.h1, ic = abelianization(cw), iw = abelianization(wy);
  std::ostringstream os;
  os << "h1 minimal = " << im.to_string() << "\n";
  os << "h1 cw      = " << ic.to_string() << "\n";
  os << "h1 wu-yu   = " << iw.to_string() << "\n";
  if (!(im == ic) || !(im == iw))
    throw InternalError("abelianizations of the three methods differ");

  // hom counting runs on simplified copies (same group) to stay inside cap
  Presentation cw_s = simplify(cw).pres, wy_s = simplify(wy).pres;
  ordered_json homs = ordered_json::object();
  for (const std::string& t : {std::string("z2"), std::string("z2^2"), std::string("z2^3")}) {
    FiniteGroupTable g = group_by_name(t);
    try {
      unsigned long long a = count_homs(mp.pres, g, cap);
      unsigned long long b = count_homs(cw_s, g, cap);
      unsigned long long c = count_homs(wy_s, g, cap);
      if (a != b || a != c)
        throw InternalError("hom counts to " + g.name + " differ: minimal " +
                            std::to_string(a) + ", cw " + std::to_string(b) + ", wu-yu " +
                            std::to_string(c));
      os << "hom_count " << g.name << " = " << a << " (all methods)\n";
      homs[g.name] = a;
    } catch (const CapExceeded&) {
      os << "hom_count " << g.name << " skipped (cap)\n";
      homs[g.name] = nullptr;
    }
  }
  os << "compare ok: certificate " << to_string(mp.certificate.level()) << "\n";
  s.extras["hom_counts"] = homs;
  s.extras["presentations"] = ordered_json::array(
      {presentation_json("minimal", mp.pres, im), presentation_json("cw", cw, ic),
       presentation_json("wu-yu", wy, iw)});
  s.extras["certificate"] = to_string(mp.certificate.level());
  s.extras["agree"] = true;
  return s.finish("compare", os.str());
}

int command_genus(Session& s) {
  GenusReport g = heegaard_report(*s.polytope);
  std::ostringstream os;
  os << "canonical splitting: N^{" << g.face_handlebody[0] << "," << g.face_handlebody[1]
     << "} / N^{" << g.skeleton_handlebody[0] << "," << g.skeleton_handlebody[1] << "}\n";
  os << "reduced canonical genus: " << g.reduced_genus << "\n";
  os << "minimal genus: " << g.minimal_genus << "\n";
  return s.finish("genus", os.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"small covers over simple 3-polytopes: cell structures and "
               "fundamental-group presentations"};
  app.require_subcommand(1);
  Session s{in, out, err};
  app.add_flag("--json", s.json, "emit a JSON run report");
  app.add_flag("--timing", s.timing, "include timing in the JSON report");
  app.fallthrough();

  std::string input = "-", output = "-", colors_path, order_path;
  std::string shape, method, palette = "1,2,4,7", targets = "z2,z2^2,z2^3";
  std::vector<int> truncate;
  int k = 3, v0 = -1;
  bool do_simplify = false;
  unsigned long long cap = 10'000'000;

  auto* gen = app.add_subcommand("gen", "build a canonical polytope");
  gen->add_option("--shape", shape, "simplex|cube|prism:n|dodecahedron|permutohedron")
      ->required();
  gen->add_option("--truncate", truncate, "vertex ids to truncate, in order");
  gen->add_option("-o,--output", output, "output path (default stdout)");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "polytope file, bundle, or - for stdin");
  };

  auto* validate = app.add_subcommand("validate", "validate polytope and optional data");
  add_input(validate);
  validate->add_option("--colors", colors_path, "characteristic map file");
  validate->add_option("--order", order_path, "vertex order file");

  auto* fvector = app.add_subcommand("fvector", "f- and h-vector");
  add_input(fvector);

  auto* belts = app.add_subcommand("belts", "list k-belts");
  add_input(belts);
  belts->add_option("--k", k, "belt length (3 or 4)")->required();

  auto* color = app.add_subcommand("color", "find a proper coloring");
  add_input(color);
  color->add_option("--palette", palette, "comma-separated colors (default 1,2,4,7)");
  color->add_option("-o,--output", output, "output path (default stdout)");

  auto* present = app.add_subcommand("present", "fundamental-group presentation");
  add_input(present);
  present->add_option("--colors", colors_path, "characteristic map file");
  present->add_option("--order", order_path, "vertex order file");
  present->add_option("--method", method, "cw|wu-yu|minimal")->required();
  present->add_option("--v0", v0, "base vertex for wu-yu (default: order source)");
  present->add_flag("--simplify", do_simplify, "apply Tietze simplification");
  present->add_option("-o,--output", output, "output path (default stdout)");

  auto* h1 = app.add_subcommand("h1", "abelianization of a presentation");
  add_input(h1);
  h1->add_option("--colors", colors_path, "characteristic map file");
  h1->add_option("--order", order_path, "vertex order file");
  h1->add_option("--method", method, "cw|wu-yu|minimal (for polytope input)");

  auto* invariants = app.add_subcommand("invariants", "finite-quotient hom counts");
  add_input(invariants);
  invariants->add_option("--colors", colors_path, "characteristic map file");
  invariants->add_option("--order", order_path, "vertex order file");
  invariants->add_option("--method", method, "cw|wu-yu|minimal (for polytope input)");
  invariants->add_option("--targets", targets, "comma-separated group names");
  invariants->add_option("--cap", cap, "assignment cap per target");

  auto* compare = app.add_subcommand("compare", "assert the three methods agree");
  add_input(compare);
  compare->add_option("--colors", colors_path, "characteristic map file");
  compare->add_option("--order", order_path, "vertex order file");
  compare->add_option("--cap", cap, "assignment cap per hom target");

  auto* genus = app.add_subcommand("genus", "Heegaard genus report");
  add_input(genus);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) return command_gen(s, shape, truncate, output);

    if (h1->parsed()) return command_h1(s, input, colors_path, order_path, method);
    if (invariants->parsed())
      return command_invariants(s, input, colors_path, order_path, method, targets, cap);

    // remaining commands read a polytope (or bundle) first
    s.load_polytope(input);
    s.load_colors(colors_path);
    s.load_order(order_path);

    if (validate->parsed()) return command_validate(s);
    if (fvector->parsed()) return command_fvector(s);
    if (belts->parsed()) return command_belts(s, k);
    if (color->parsed()) return command_color(s, palette, output);
    if (present->parsed()) return command_present(s, method, v0, do_simplify, output);
    if (compare->parsed()) return command_compare(s, cap);
    if (genus->parsed()) return command_genus(s);
    err << "error: no subcommand\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace smallcover
