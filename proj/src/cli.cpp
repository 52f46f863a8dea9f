#include "steinobd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <variant>

#include "steinobd/classifier.hpp"
#include "steinobd/error.hpp"
#include "steinobd/families.hpp"
#include "steinobd/front.hpp"
#include "steinobd/handlebody.hpp"
#include "steinobd/lattice.hpp"
#include "steinobd/sweep.hpp"

namespace steinobd::cli {

using nlohmann::ordered_json;

namespace {

struct Style {
  bool on = false;
  std::string bold(const std::string& s) const { return on ? "\x1b[1m" + s + "\x1b[0m" : s; }
};

Style style_from_env() {
  const char* v = std::getenv("STEINOBD_COLOR");
  return Style{v != nullptr && std::string(v) == "1"};
}

int64_t parse_int_arg(const std::string& s, const std::string& what) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParamError(what + ": expected an integer, got '" + s + "'");
  return v;
}

std::vector<int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int64_t> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_int_arg(s.substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Variant parse_variant(const std::string& s) {
  if (s == "A" || s == "a") return Variant::A;
  if (s == "B" || s == "b") return Variant::B;
  throw ParamError("variant must be A or B, got '" + s + "'");
}

void set_m(FamilyParams& q, const std::string& s) {
  auto m = parse_int_list(s, "--m");
  if (m.size() != 3) throw ParamError("--m takes m0,m1,m2 (three integers)");
  q.m0 = m[0];
  q.m1 = m[1];
  q.m2 = m[2];
}

std::pair<int64_t, int64_t> parse_p_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto p = parse_int_arg(s, "--p");
    return {p, p};
  }
  return {parse_int_arg(s.substr(0, dots), "--p"), parse_int_arg(s.substr(dots + 2), "--p")};
}

// family:A:p=7:m=5,3,1[:n=0]
FamilyParams parse_descriptor(const std::string& text) {
  FamilyParams q;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() < 2 || parts[0] != "family")
    throw ParamError("family descriptor must look like family:A:p=1:m=5,3,1[:n=0]");
  q.variant = parse_variant(parts[1]);
  bool have_p = false, have_m = false;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw ParamError("expected key=value in '" + parts[i] + "'");
    auto key = parts[i].substr(0, eq), value = parts[i].substr(eq + 1);
    if (key == "p") {
      q.p = parse_int_arg(value, "p");
      have_p = true;
    } else if (key == "m") {
      set_m(q, value);
      have_m = true;
    } else if (key == "n") {
      q.n = parse_int_arg(value, "n");
    } else {
      throw ParamError("unknown descriptor key '" + key + "'");
    }
  }
  if (!have_p || !have_m) throw ParamError("family descriptor needs p= and m=");
  return q;
}

ordered_json params_json(const FamilyParams& q) {
  return {{"variant", std::string(1, variant_letter(q.variant))},
          {"p", q.p},
          {"m", {q.m0, q.m1, q.m2}},
          {"n", q.n}};
}

// A classified input: either a handlebody file or a family member.
struct Input {
  SteinHandlebody page;
  ordered_json source;
  std::string source_text;
  std::vector<std::string> warnings;
};

Input load_family(const FamilyParams& q) {
  validate(q);
  return {generate(q), params_json(q), "family " + describe(q), warnings(q)};
}

Input load_input(const std::string& arg) {
  if (arg.rfind("family:", 0) == 0) return load_family(parse_descriptor(arg));
  return {load_handlebody_file(arg), arg, arg, {}};
}

ordered_json classify_json(const Input& in) {
  auto label = supported_contact(OpenBook5{in.page});
  auto c1 = c1_cochain(in.page);
  return {{"command", "classify"},
          {"source", in.source},
          {"r", label.r()},
          {"n", label.n()},
          {"label", label.name()},
          {"diffeo", diffeo_name(label.diffeo())},
          {"b2", in.page.b2()},
          {"c1", c1.values()},
          {"rotation_divisor", rotation_divisor(in.page)},
          {"warnings", in.warnings}};
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(std::vector<int64_t>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

void print_warnings(std::ostream& out, const std::vector<std::string>& w) {
  for (const auto& s : w) out << "warning: " << s << '\n';
}

// --- subcommands ----------------------------------------------------------

int cmd_invariants(const std::string& path, bool json, const Style& st, std::ostream& out) {
  auto f = load_front_file(path);
  auto inv = classical_invariants(f);
  const int c = f.component_count();
  if (json) {
    ordered_json comps = ordered_json::array();
    for (int k = 0; k < c; ++k)
      comps.push_back({{"index", k},
                       {"tb", inv.tb[k]},
                       {"rot", inv.rot[k]},
                       {"writhe", inv.writhe[k]},
                       {"orientation",
                        f.orientation(k) == Orientation::AsDefault ? "default" : "reversed"}});
    out << ordered_json{{"command", "invariants"},
                        {"source", path},
                        {"word", f.diagram().word()},
                        {"events", f.diagram().size()},
                        {"components", comps},
                        {"linking", inv.linking},
                        {"warnings", ordered_json::array()}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "front: " << path << '\n';
  out << "word: " << f.diagram().word() << '\n';
  out << "components: " << c << '\n';
  for (int k = 0; k < c; ++k)
    out << st.bold("component " + std::to_string(k)) << ": tb=" << inv.tb[k]
        << " rot=" << inv.rot[k] << " writhe=" << inv.writhe[k]
        << (f.orientation(k) == Orientation::Reversed ? " (reversed)" : "") << '\n';
  if (c >= 2) {
    out << "linking:\n";
    for (int a = 0; a < c; ++a) {
      out << ' ';
      for (int b = 0; b < c; ++b) {
        out << ' ' << std::setw(3);
        if (a == b)
          out << '.';
        else
          out << inv.linking[a][b];
      }
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_classify(const Input& in, bool json, const Style& st, std::ostream& out) {
  if (json) {
    out << classify_json(in).dump(2) << '\n';
    return kExitOk;
  }
  auto label = supported_contact(OpenBook5{in.page});
  out << "source: " << in.source_text << '\n';
  out << "b2: " << in.page.b2() << '\n';
  out << "c1: " << to_string(c1_cochain(in.page)) << '\n';
  out << "rotation divisor: " << rotation_divisor(in.page) << '\n';
  out << "contact structure: " << st.bold(label.name()) << '\n';
  out << "manifold: " << label.manifold() << '\n';
  print_warnings(out, in.warnings);
  return kExitOk;
}

int cmd_equivalent(const Input& a, const Input& b, bool json, const Style& st, std::ostream& out) {
  const OpenBook5 oa{a.page}, ob{b.page};
  const auto la = supported_contact(oa), lb = supported_contact(ob);
  const auto why = difference(oa, ob);
  std::optional<UnimodularMatrix> witness;
  if (why.empty()) {
    witness = witness_automorphism(oa, ob);
    // Never report a witness that does not do its job.
    if (*witness * c1_cochain(a.page) != c1_cochain(b.page))
      throw Error("internal error: witness does not map c1(a) to c1(b)");
  }
  auto warn = a.warnings;
  warn.insert(warn.end(), b.warnings.begin(), b.warnings.end());
  if (json) {
    ordered_json j{{"command", "equivalent"},
                   {"a", classify_json(a)},
                   {"b", classify_json(b)},
                   {"contactomorphic", why.empty()}};
    if (witness) {
      j["witness"] = matrix_json(witness->matrix());
      j["witness_det"] = witness->det();
    } else {
      j["reason"] = why;
    }
    j["warnings"] = warn;
    out << j.dump(2) << '\n';
  } else {
    out << "a: " << a.source_text << ": " << st.bold(la.name()) << " on " << la.manifold() << '\n';
    out << "b: " << b.source_text << ": " << st.bold(lb.name()) << " on " << lb.manifold() << '\n';
    if (witness) {
      out << "contactomorphic: yes\n";
      out << "witness: " << to_string(witness->matrix()) << " (det " << witness->det() << ")\n";
    } else {
      out << "contactomorphic: no (" << why << ")\n";
    }
    print_warnings(out, warn);
  }
  return why.empty() ? kExitOk : kExitNegative;
}

int cmd_table(const FamilyParams& base, int64_t p_lo, int64_t p_hi, bool json, const Style& st,
              std::ostream& out) {
  validate(base);
  auto batch = p_range(base, p_lo, p_hi);
  for (const auto& q : batch) validate(q);
  auto rows = classify_batch(batch);
  const auto pattern = label_pattern(rows);
  const auto warn = warnings(base);
  if (json) {
    ordered_json jr = ordered_json::array();
    for (const auto& r : rows)
      jr.push_back({{"p", r.params.p},
                    {"c1", r.c1.values()},
                    {"r", r.label.r()},
                    {"n", r.label.n()},
                    {"label", r.label.name()},
                    {"diffeo", diffeo_name(r.label.diffeo())}});
    auto src = params_json(base);
    src["p"] = {p_lo, p_hi};
    out << ordered_json{{"command", "table"},
                        {"source", src},
                        {"rows", jr},
                        {"pattern", pattern_name(pattern)},
                        {"warnings", warn}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "family: variant=" << variant_letter(base.variant) << " m=" << base.m0 << ','
      << base.m1 << ',' << base.m2 << " n=" << base.n << " p=" << p_lo << ".." << p_hi << '\n';
  std::size_t c1w = 2;
  for (const auto& r : rows) c1w = std::max(c1w, to_string(r.c1).size());
  out << std::left << std::setw(6) << "p" << std::setw(c1w + 2) << "c1" << std::setw(6) << "r"
      << std::setw(16) << "label"
      << "manifold" << '\n';
  for (const auto& r : rows)
    out << std::left << std::setw(6) << r.params.p << std::setw(c1w + 2) << to_string(r.c1)
        << std::setw(6) << r.label.r() << std::setw(16) << r.label.name() << r.label.manifold()
        << '\n';
  out << std::right;
  out << st.bold("labels: " + std::string(pattern_name(pattern))) << '\n';
  print_warnings(out, warn);
  return kExitOk;
}

int cmd_canonical(int64_t r, int64_t n, const std::string& path, bool json, const Style& st,
                  std::ostream& out) {
  auto model = canonical_model(r, n);
  namespace fs = std::filesystem;
  const fs::path hb(path);
  const fs::path dir = hb.parent_path();
  const std::string stem = hb.stem().string();

  std::vector<std::string> front_names;
  std::ostringstream body;
  body << "# canonical Stein handlebody: rotation divisor " << r << ", b2 " << n << '\n';
  for (std::size_t k = 0; k < model.b2(); ++k) {
    const auto& h = model.handles()[k];
    const std::string name = stem + "_h" + std::to_string(k) + ".front";
    const fs::path fp = dir / name;
    std::ofstream fo(fp);
    if (!fo) throw Error("cannot write front file '" + fp.string() + "'");
    fo << "# handle " << k << ": tb=" << h.tb() << " rot=" << h.rot() << '\n'
       << format_front_document(*h.source()->front);
    if (!fo) throw Error("cannot write front file '" + fp.string() + "'");
    front_names.push_back(fp.string());
    body << "handle tb=" << h.tb() << " rot=" << h.rot() << " front=" << name << " component=0\n";
  }
  std::ofstream ho(hb);
  if (!ho) throw Error("cannot write handlebody file '" + path + "'");
  ho << body.str();
  ho.close();
  if (!ho) throw Error("cannot write handlebody file '" + path + "'");

  const ContactLabel label(r, n);
  if (json) {
    out << ordered_json{{"command", "canonical"},
                        {"path", path},
                        {"fronts", front_names},
                        {"r", r},
                        {"n", n},
                        {"label", label.name()},
                        {"diffeo", diffeo_name(label.diffeo())},
                        {"c1", c1_cochain(model).values()},
                        {"warnings", ordered_json::array()}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "wrote " << path << " (" << model.b2() << " handles)\n";
  for (const auto& f : front_names) out << "wrote " << f << '\n';
  out << "c1: " << to_string(c1_cochain(model)) << '\n';
  out << "contact structure: " << st.bold(label.name()) << '\n';
  out << "manifold: " << label.manifold() << '\n';
  return kExitOk;
}

int cmd_automorphism(const std::string& from, const std::string& to, bool json, std::ostream& out) {
  IntVector v(parse_int_list(from, "--from"));
  IntVector w(parse_int_list(to, "--to"));
  if (v.size() != w.size()) throw ParamError("--from and --to must have the same length");
  const auto gv = gcd_nonneg(v), gw = gcd_nonneg(w);
  if (gv != gw) {
    const std::string why = "gcd " + std::to_string(gv) + " != " + std::to_string(gw);
    if (json)
      out << ordered_json{{"command", "automorphism"},
                          {"from", v.values()},
                          {"to", w.values()},
                          {"exists", false},
                          {"reason", why},
                          {"warnings", ordered_json::array()}}
                 .dump(2)
          << '\n';
    else
      out << "no automorphism: " << why << '\n';
    return kExitNegative;
  }
  auto a = automorphism_mapping(v, w);
  if (json) {
    out << ordered_json{{"command", "automorphism"},
                        {"from", v.values()},
                        {"to", w.values()},
                        {"exists", true},
                        {"matrix", matrix_json(a.matrix())},
                        {"det", a.det()},
                        {"warnings", ordered_json::array()}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "from: " << to_string(v) << '\n';
  out << "to: " << to_string(w) << '\n';
  out << "matrix: " << to_string(a.matrix()) << '\n';
  out << "det: " << a.det() << '\n';
  return kExitOk;
}

struct FamilyFlags {
  std::string variant, m, p;
  int64_t n = 0;

  void attach(CLI::App* sub, bool p_range) {
    sub->add_option("--variant", variant, "Stein structure: A or B");
    sub->add_option("--m", m, "m0,m1,m2");
    sub->add_option("--p", p, p_range ? "p or p_lo..p_hi" : "p");
    sub->add_option("--n", n, "size of the Y_n summand (0 = bare page)");
  }
  bool given() const { return !variant.empty() || !m.empty() || !p.empty(); }
  FamilyParams params() const {
    if (variant.empty() || m.empty() || p.empty())
      throw ParamError("family input needs --variant, --m and --p");
    FamilyParams q;
    q.variant = parse_variant(variant);
    set_m(q, m);
    q.n = n;
    return q;
  }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stein handlebody invariants and contact 5-manifold classification", "steinobd"};
  app.require_subcommand(1);
  const Style st = style_from_env();
  bool json = false;

  auto* inv = app.add_subcommand("invariants", "tb, rot, writhe and linking of a front file");
  std::string front_path;
  inv->add_option("front", front_path, "front-word file")->required();
  inv->add_flag("--json", json, "machine-readable output");

  auto* cls = app.add_subcommand("classify", "classify the open book (X, id) of a page");
  std::string cls_input;
  FamilyFlags cls_family;
  cls->add_option("input", cls_input, "handlebody file or family descriptor");
  cls_family.attach(cls, false);
  cls->add_flag("--json", json, "machine-readable output");

  auto* eq = app.add_subcommand("equivalent", "decide contactomorphism of two open books");
  std::string eq_a, eq_b;
  eq->add_option("a", eq_a, "handlebody file or family descriptor")->required();
  eq->add_option("b", eq_b, "handlebody file or family descriptor")->required();
  eq->add_flag("--json", json, "machine-readable output");

  auto* tab = app.add_subcommand("table", "classify a family over a range of p");
  FamilyFlags tab_family;
  tab_family.attach(tab, true);
  tab->add_flag("--json", json, "machine-readable output");

  auto* can = app.add_subcommand("canonical", "write the canonical unknot model for (r, n)");
  int64_t can_r = 0, can_n = 1;
  std::string can_out;
  can->add_option("--r", can_r, "rotation divisor")->required();
  can->add_option("--n", can_n, "b2")->required();
  can->add_option("--out", can_out, "handlebody file to write")->required();
  can->add_flag("--json", json, "machine-readable output");

  auto* aut = app.add_subcommand("automorphism", "unimodular A with A*from = to");
  std::string aut_from, aut_to;
  aut->add_option("--from", aut_from, "comma separated integers")->required();
  aut->add_option("--to", aut_to, "comma separated integers")->required();
  aut->add_flag("--json", json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(front_path, json, st, out);
    if (cls->parsed()) {
      if (!cls_input.empty() == cls_family.given())
        throw ParamError("classify needs either an input argument or --variant/--m/--p");
      if (!cls_input.empty()) return cmd_classify(load_input(cls_input), json, st, out);
      auto q = cls_family.params();
      q.p = parse_int_arg(cls_family.p, "--p");
      return cmd_classify(load_family(q), json, st, out);
    }
    if (eq->parsed()) return cmd_equivalent(load_input(eq_a), load_input(eq_b), json, st, out);
    if (tab->parsed()) {
      auto q = tab_family.params();
      auto [lo, hi] = parse_p_range(tab_family.p);
      q.p = lo;
      return cmd_table(q, lo, hi, json, st, out);
    }
    if (can->parsed()) return cmd_canonical(can_r, can_n, can_out, json, st, out);
    if (aut->parsed()) return cmd_automorphism(aut_from, aut_to, json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

} // namespace steinobd::cli
