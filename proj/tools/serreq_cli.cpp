#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "serreq/counterexamples.hpp"
#include "serreq/json_io.hpp"
#include "serreq/sheaf.hpp"

namespace {

using namespace serreq;
using nlohmann::json;

struct Options {
  std::uint32_t p = 32003;
  int nvars = 2;
  std::string m_path, n_path;
  int d = 0;
  bool has_d = false;
  std::string range;
  std::string format = "text";
  int count = 3;
  std::vector<std::string> elem;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw ParseError("range must look like a..b, got: " + text);
  try {
    int a = std::stoi(text.substr(0, pos));
    int b = std::stoi(text.substr(pos + 2));
    if (a > b) throw ParseError("empty range: " + text);
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw ParseError("range must look like a..b, got: " + text);
  }
}

void emit(const Options& opt, const json& report, const std::string& text) {
  if (opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

json rows_json(const std::vector<FreeElement>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = json::array();
    for (const auto& c : r.components()) row.push_back(format_poly(c));
    out.push_back(std::move(row));
  }
  return out;
}

std::string rows_text(const std::vector<FreeElement>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += "  (";
    for (int i = 0; i < r.rank(); ++i) {
      if (i) out += ", ";
      out += format_poly(r.component(i));
    }
    out += ")\n";
  }
  return out;
}

std::pair<int, int> degree_window(const Options& opt, const GradedModulePresentation& m) {
  if (!opt.range.empty()) return parse_range(opt.range);
  if (opt.has_d) return {opt.d, opt.d};
  int top = m.is_zero_module() ? 3 : regularity(m) + 3;
  return {-5, std::max(-5, top)};
}

int cmd_gb(const Options& opt) {
  auto m = load_module(opt.m_path);
  const auto& gb = m.relation_gb();
  json report{{"command", "gb"}, {"size", gb.elements.size()},
              {"basis", rows_json(gb.elements)}};
  emit(opt, report,
       "reduced Groebner basis (" + std::to_string(gb.elements.size()) + " elements)\n" +
           rows_text(gb.elements));
  return 0;
}

int cmd_nf(const Options& opt) {
  auto m = load_module(opt.m_path);
  if (opt.elem.size() != static_cast<std::size_t>(m.f0().rank()))
    throw ParseError("--elem needs one polynomial per generator (" +
                     std::to_string(m.f0().rank()) + ")");
  std::vector<GradedPolynomial> comps;
  for (const auto& s : opt.elem) comps.push_back(parse_poly(m.ring(), s));
  FreeElement v(std::move(comps));
  FreeElement nf = normal_form(m.ring(), v, m.relation_gb());
  json report{{"command", "nf"}, {"normal_form", rows_json({nf})[0]},
              {"is_member", nf.is_zero()}};
  emit(opt, report, "normal form:\n" + rows_text({nf}) +
                        (nf.is_zero() ? "element lies in the submodule\n" : ""));
  return 0;
}

int cmd_saturate(const Options& opt) {
  auto m = load_module(opt.m_path);
  const auto& sat = m.saturated_gb();
  GradedModulePresentation satmod(m.ring(), m.f0(), sat.elements);
  json report{{"command", "saturate"}, {"module", module_to_json(satmod)}};
  emit(opt, report,
       "saturated relations (" + std::to_string(sat.elements.size()) + " elements)\n" +
           rows_text(sat.elements));
  return 0;
}

int cmd_torsion(const Options& opt) {
  auto m = load_module(opt.m_path);
  TorsionParts parts = torsion_submodule(m);
  auto top = torsion_top_degree(m);
  json report{{"command", "torsion"},
              {"torsion_generators", parts.torsion.f0().gen_degrees},
              {"is_torsion", is_torsion(m)},
              {"top_degree", top ? json(*top) : json(nullptr)}};
  std::string text = "torsion submodule: " +
                     std::to_string(parts.torsion.f0().rank()) + " generators\n";
  text += top ? "top degree " + std::to_string(*top) + "\n" : "torsion is zero\n";
  if (is_torsion(m)) text += "module is torsion\n";
  emit(opt, report, text);
  return 0;
}

int cmd_truncate(const Options& opt) {
  if (!opt.has_d) throw ParseError("truncate needs --d");
  auto m = load_module(opt.m_path);
  auto [trunc, incl] = truncate(m, opt.d);
  json report{{"command", "truncate"},
              {"d", opt.d},
              {"minimal_generators", trunc.f0().rank()},
              {"module", module_to_json(trunc)}};
  emit(opt, report,
       "truncation at degree " + std::to_string(opt.d) + ": " +
           std::to_string(trunc.f0().rank()) + " minimal generators\n");
  return 0;
}

int cmd_resolve(const Options& opt) {
  auto m = load_module(opt.m_path);
  FreeResolution res = min_free_resolution(m, m.ring().nvars + 1);
  json steps = json::array();
  std::string text = "minimal free resolution\n";
  for (std::size_t i = 0; i < res.frees.size(); ++i) {
    steps.push_back({{"rank", res.frees[i].rank()},
                     {"gen_degrees", res.frees[i].gen_degrees}});
    text += "  F" + std::to_string(i) + ": rank " +
            std::to_string(res.frees[i].rank()) + ", degrees";
    for (int d : res.frees[i].gen_degrees) text += " " + std::to_string(d);
    text += "\n";
  }
  json report{{"command", "resolve"}, {"steps", steps}};
  emit(opt, report, text);
  return 0;
}

int cmd_reg(const Options& opt) {
  auto m = load_module(opt.m_path);
  int r = regularity(m);
  json report{{"command", "reg"}, {"regularity", r}};
  emit(opt, report, "regularity " + std::to_string(r) + "\n");
  return 0;
}

int cmd_hilbert(const Options& opt) {
  auto m = load_module(opt.m_path);
  HilbertData h = hilbert(m);
  auto [lo, hi] = degree_window(opt, m);
  json table = json::array();
  std::string text = "degree  dim  polynomial\n";
  for (int d = lo; d <= hi; ++d) {
    long val = m.piece_dim(d);
    long long pv = h.eval_polynomial(d);
    table.push_back({{"d", d}, {"dim", val}, {"polynomial", pv}});
    text += "  " + std::to_string(d) + "  " + std::to_string(val) + "  " +
            std::to_string(pv) + "\n";
  }
  json coeffs = json::array();
  for (auto [num, den] : h.rational_coefficients())
    coeffs.push_back({{"num", num}, {"den", den}});
  json report{{"command", "hilbert"},
              {"table", table},
              {"stability_bound", h.stability_bound},
              {"coefficients", coeffs}};
  emit(opt, report, text + "stable from degree " +
                        std::to_string(h.stability_bound) + "\n");
  return 0;
}

int cmd_hom(const Options& opt) {
  auto m = load_module(opt.m_path);
  auto n = load_module(opt.n_path);
  auto basis = hom_degree_zero(m, n);
  json maps = json::array();
  for (const auto& phi : basis) maps.push_back(rows_json(phi.matrix()));
  json report{{"command", "hom"}, {"dimension", basis.size()}, {"basis", maps}};
  emit(opt, report, "Hom dimension " + std::to_string(basis.size()) + "\n");
  return 0;
}

int cmd_qhom(const Options& opt) {
  auto m = load_module(opt.m_path);
  auto n = load_module(opt.n_path);
  HomGroup h = hom_quotient(QObject{m}, QObject{n});
  json report{{"command", "qhom"},
              {"dimension", h.dimension},
              {"level", h.level_used},
              {"certificate", {h.stabilization_certificate.first,
                               h.stabilization_certificate.second}}};
  emit(opt, report,
       "quotient Hom dimension " + std::to_string(h.dimension) + " (level " +
           std::to_string(h.level_used) + ")\n");
  return 0;
}

int cmd_sections(const Options& opt) {
  auto m = load_module(opt.m_path);
  CoherentSheaf f = sheafify(m);
  auto [lo, hi] = degree_window(opt, m);
  json table = json::array();
  std::string text = "degree  h0\n";
  for (int d = lo; d <= hi; ++d) {
    long dim = global_sections_dim(f, d);
    table.push_back({{"d", d}, {"h0", dim}});
    text += "  " + std::to_string(d) + "  " + std::to_string(dim) + "\n";
  }
  json report{{"command", "sections"}, {"table", table}};
  emit(opt, report, text);
  return 0;
}

int cmd_chi(const Options& opt) {
  auto m = load_module(opt.m_path);
  CoherentSheaf f = sheafify(m);
  auto [lo, hi] = degree_window(opt, m);
  json table = json::array();
  std::string text = "degree  chi\n";
  for (int d = lo; d <= hi; ++d) {
    long long chi = euler_characteristic(f, d);
    table.push_back({{"d", d}, {"chi", chi}});
    text += "  " + std::to_string(d) + "  " + std::to_string(chi) + "\n";
  }
  json report{{"command", "chi"}, {"table", table}};
  emit(opt, report, text);
  return 0;
}

int cmd_demo_skyscraper(const Options& opt) {
  Ring R{PrimeField(opt.p), 2};
  auto table = demo_no_section(skyscraper_module(R), opt.count);
  json jt = json::array();
  std::string text = "sections of the skyscraper Sh(S/<x1>) on P^1\ndegree  h0\n";
  for (auto [d, dim] : table) {
    jt.push_back({{"d", d}, {"h0", dim}});
    text += "  " + std::to_string(d) + "  " + std::to_string(dim) + "\n";
  }
  json report{{"command", "demo-skyscraper"}, {"table", jt}};
  emit(opt, report,
       text + "every degree carries a section: the section module is not "
              "finitely generated\n");
  return 0;
}

int cmd_demo_forgetful(const Options& opt) {
  PrimeField f3(3);
  FiniteRep triv = trivial_rep(f3, 2, 1);
  FiniteRep sign = sign_rep(f3);
  auto basis = equivariant_hom_basis(triv, sign);
  NotFullWitness w = check_not_full(triv, sign);
  bool reflects = reflects_isos_check(sign, sign);
  json report{{"command", "demo-forgetful"},
              {"hom_dimension", basis.size()},
              {"witness", w.explanation},
              {"reflects_isos", reflects}};
  emit(opt, report,
       "trivial vs sign representation of C2 over F3\n"
       "equivariant hom dimension " + std::to_string(basis.size()) + "\n" +
           w.explanation + "\n" +
           (reflects ? "forgetful functor reflects isomorphisms\n" : ""));
  return 0;
}

int cmd_demo_conimg(const Options& opt) {
  PrimeField f3(3);
  // one object of dimension 1; ambient category = all scalar maps
  FiniteCategory cat(f3, {1});
  for (Fp c = 0; c < 3; ++c) cat.add_morphism(0, 0, Mat{{c}});
  cat.close_under_composition();
  std::vector<CatMorphism> gens{{0, 0, Mat{{2}}}, {0, 0, Mat{{0}}}};
  FiniteCategory closure = conimg_closure(gens, cat);
  bool factor = conimg_factorization_check(gens, gens, gens, cat, cat);
  json report{{"command", "demo-conimg"},
              {"closure_size", closure.hom_set(0, 0).size()},
              {"factorization", factor}};
  emit(opt, report,
       "conservative-image closure of {2} in scalar maps over F3: " +
           std::to_string(closure.hom_set(0, 0).size()) + " morphisms\n" +
           (factor ? "conimg factorization holds\n" : ""));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded modules, Serre quotients, and coherent sheaves on P^n"};
  app.require_subcommand(1);
  Options opt;

  auto add_module_flags = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("--M", opt.m_path, "module file")->required();
    if (needs_n) sub->add_option("--N", opt.n_path, "second module file")->required();
    sub->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the relations");
  add_module_flags(gb, false);
  auto* nf = app.add_subcommand("nf", "normal form of an element");
  add_module_flags(nf, false);
  nf->add_option("--elem", opt.elem, "one polynomial per generator")->required();
  auto* sat = app.add_subcommand("saturate", "saturation of the relations");
  add_module_flags(sat, false);
  auto* tor = app.add_subcommand("torsion", "torsion submodule data");
  add_module_flags(tor, false);
  auto* trunc = app.add_subcommand("truncate", "truncation M_{>=d}");
  add_module_flags(trunc, false);
  trunc->add_option("--d", opt.d, "truncation degree")
      ->each([&](const std::string&) { opt.has_d = true; });
  trunc->add_option("--n,--nvars", opt.nvars, "expected variable count (check only)");
  auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
  add_module_flags(resolve, false);
  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  add_module_flags(reg, false);
  auto* hil = app.add_subcommand("hilbert", "Hilbert function and polynomial");
  add_module_flags(hil, false);
  hil->add_option("--range", opt.range, "degree window a..b");
  auto* hom = app.add_subcommand("hom", "degree-0 module homomorphisms");
  add_module_flags(hom, true);
  auto* qhom = app.add_subcommand("qhom", "Hom in the Serre quotient");
  add_module_flags(qhom, true);
  auto* sec = app.add_subcommand("sections", "global sections of the sheafification");
  add_module_flags(sec, false);
  sec->add_option("--d", opt.d)->each([&](const std::string&) { opt.has_d = true; });
  sec->add_option("--range", opt.range, "degree window a..b");
  auto* chi = app.add_subcommand("chi", "Euler characteristic table");
  add_module_flags(chi, false);
  chi->add_option("--d", opt.d)->each([&](const std::string&) { opt.has_d = true; });
  chi->add_option("--range", opt.range, "degree window a..b");

  auto* sky = app.add_subcommand("demo-skyscraper",
                                 "sections of the skyscraper in negative degrees");
  sky->add_option("--N", opt.count, "number of degrees");
  sky->add_option("--p", opt.p, "field characteristic");
  sky->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  auto* forget = app.add_subcommand("demo-forgetful",
                                    "fullness failure of the forgetful functor");
  forget->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  auto* conimg = app.add_subcommand("demo-conimg", "conservative-image closure demo");
  conimg->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gb->parsed()) return cmd_gb(opt);
    if (nf->parsed()) return cmd_nf(opt);
    if (sat->parsed()) return cmd_saturate(opt);
    if (tor->parsed()) return cmd_torsion(opt);
    if (trunc->parsed()) return cmd_truncate(opt);
    if (resolve->parsed()) return cmd_resolve(opt);
    if (reg->parsed()) return cmd_reg(opt);
    if (hil->parsed()) return cmd_hilbert(opt);
    if (hom->parsed()) return cmd_hom(opt);
    if (qhom->parsed()) return cmd_qhom(opt);
    if (sec->parsed()) return cmd_sections(opt);
    if (chi->parsed()) return cmd_chi(opt);
    if (sky->parsed()) return cmd_demo_skyscraper(opt);
    if (forget->parsed()) return cmd_demo_forgetful(opt);
    if (conimg->parsed()) return cmd_demo_conimg(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StabilizationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
