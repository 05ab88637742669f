#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "reticular/catalog.hpp"
#include "reticular/classifier.hpp"
#include "reticular/discriminant.hpp"
#include "reticular/geometry.hpp"
#include "reticular/local_algebra.hpp"
#include "reticular/mesh_export.hpp"
#include "reticular/numeric_config.hpp"
#include "reticular/parse.hpp"
#include "reticular/report_json.hpp"
#include "reticular/unfoldings.hpp"

namespace reticular::cli {

namespace {

struct Options {
  std::string text;
  std::optional<int> r;
  std::optional<int> k;
  std::optional<int> n;
  std::string mode;
  bool legendrian = false;
  bool text_out = false;
  bool json_out = false;
  std::string catalog_key;
  std::string range;
  int res = 100;
  std::string out_path;
  std::string format;
  std::optional<double> tol_eq;
  std::string seed_box;
  std::string config;
  std::string simd;
  std::optional<int> threads;
  std::string prefix = "u";
  int cap = kDefaultCap;
  std::optional<int> r_filter;
  int n_max = 1 << 20;
};

int highest_index(const std::string& text, char var) {
  const std::regex re(std::string("\\b") + var + "([0-9]+)\\b");
  int best = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it) {
    best = std::max(best, std::stoi((*it)[1].str()));
  }
  return best;
}

int corner_count(const Options& o) { return o.r ? *o.r : highest_index(o.text, 'x'); }

CornerPoly read_germ(const Options& o) {
  const int k = o.k ? *o.k : highest_index(o.text, 'y');
  return parse_poly(o.text, corner_count(o), k, {});
}

// Parameters: q1..qn, then u-parameters found in the text, then z.
GeneratingFamily read_family(const Options& o, Kind kind) {
  if (!o.catalog_key.empty()) return catalog_get(o.catalog_key, kind).family;
  if (o.text.empty()) throw DomainError("give a family expression or --catalog KEY");
  const int k = o.k ? *o.k : highest_index(o.text, 'y');
  const int n = o.n ? *o.n : highest_index(o.text, 'q');
  std::vector<std::string> params;
  for (int i = 1; i <= n; ++i) params.push_back("q" + std::to_string(i));
  for (int i = 1, m = highest_index(o.text, 'u'); i <= m; ++i) params.push_back("u" + std::to_string(i));
  if (kind == Kind::Legendrian) params.push_back("z");
  return GeneratingFamily(parse_poly(o.text, corner_count(o), k, params), kind);
}

Mode mode_or(const Options& o, Mode fallback) { return o.mode.empty() ? fallback : parse_mode(o.mode); }

NumericConfig numeric_config(const Options& o) {
  NumericConfig cfg = o.config.empty() ? NumericConfig{} : NumericConfig::from_file(o.config);
  if (o.tol_eq) cfg.apply("tol_eq", std::to_string(*o.tol_eq));
  if (!o.seed_box.empty()) {
    const auto [lo, hi] = parse_interval(o.seed_box);
    cfg.seed_lo = lo;
    cfg.seed_hi = hi;
  }
  if (!o.simd.empty()) cfg.simd = kernels::parse_backend(o.simd);
  if (o.threads) cfg.threads = *o.threads;
  return cfg;
}

Region parse_region(const std::string& text, std::size_t want, bool z_allowed) {
  Region reg;
  std::stringstream ss(text.empty() ? std::string("-1:1") : text);
  std::string part;
  while (std::getline(ss, part, ',')) reg.push_back(parse_interval(part));
  if (reg.size() == 1 && want != 1) {
    if (want == 0 && z_allowed) return reg;  // z interval only
    reg.assign(want, reg.front());
  }
  if (reg.size() != want && !(z_allowed && reg.size() == want + 1)) {
    throw DomainError("--range needs " + std::to_string(want) + " interval(s)" +
                      (z_allowed ? " (plus an optional z interval)" : ""));
  }
  return reg;
}

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string codim_text(const QuotientReport& q) {
  return q.infinite ? std::string("INFINITE") : std::to_string(q.codim);
}

int cmd_classify(const Options& o, std::ostream& out) {
  const CornerPoly f = read_germ(o);
  const ClassifyResult c = classify(f, mode_or(o, Mode::R));
  if (!o.text_out) {
    print(out, to_json(c));
    return 0;
  }
  out << "germ:        " << format_poly(f) << '\n';
  out << "class:       " << c.verdict << '\n';
  if (c.cls) out << "codim:       " << c.cls->codim << "\ncorank:      " << c.cls->corank << '\n';
  out << "determinacy: " << (c.determinacy ? std::to_string(*c.determinacy) : std::string("none")) << '\n';
  out << "residual:    " << format_poly(c.split.residual) << " (quadratic rank " << c.split.quad_rank << ")\n";
  for (const auto& line : c.log) out << "  " << line << '\n';
  return 0;
}

int cmd_codim(const Options& o, std::ostream& out) {
  const CornerPoly f = read_germ(o);
  const QuotientReport q = codimension(f, mode_or(o, Mode::R), o.cap);
  if (!o.text_out) {
    print(out, to_json(q));
    return 0;
  }
  out << "mode:       " << to_string(q.mode) << '\n';
  out << "codim:      " << codim_text(q) << '\n';
  out << "basis:      " << join(q.basis_strings(), ", ") << '\n';
  out << "truncation: " << q.l_used << (q.stabilized ? " (stabilized)" : " (not stabilized)") << '\n';
  return 0;
}

int cmd_determinacy(const Options& o, std::ostream& out) {
  const CornerPoly f = read_germ(o);
  const Mode m = mode_or(o, Mode::R);
  const auto d = determinacy_bound(f, m, o.cap);
  if (!o.text_out) {
    Json j;
    j["mode"] = to_string(m);
    if (d) j["determinacy"] = *d;
    else j["determinacy"] = "FAIL";
    j["cap"] = o.cap;
    print(out, j);
    return 0;
  }
  out << (d ? std::to_string(*d) + "-determined" : "no bound up to " + std::to_string(o.cap)) << '\n';
  return 0;
}

int cmd_unfold(const Options& o, std::ostream& out) {
  const CornerPoly f = read_germ(o);
  const Kind kind = o.legendrian ? Kind::Legendrian : Kind::Lagrangian;
  const Mode m = mode_or(o, o.legendrian ? Mode::K : Mode::Rplus);
  const GeneratingFamily F = build_versal(f, m, kind, o.prefix);
  if (!o.text_out) {
    Json j;
    j["family"] = format_poly(F.F());
    j["kind"] = to_string(kind);
    j["mode"] = to_string(m);
    j["params"] = F.F().layout().params();
    print(out, j);
    return 0;
  }
  out << format_poly(F.F()) << '\n';
  return 0;
}

int cmd_versal(const Options& o, std::ostream& out, bool stability) {
  const Kind kind = o.legendrian ? Kind::Legendrian : Kind::Lagrangian;
  const GeneratingFamily F = read_family(o, kind);
  const Mode m = mode_or(o, o.legendrian ? Mode::K : Mode::Rplus);
  if (stability) {
    const StabilityReport s = stability_verdict(F, m);
    if (!o.text_out) {
      print(out, to_json(s));
      return 0;
    }
    out << "family: " << format_poly(F.F()) << '\n';
    out << "class:  " << s.class_label << '\n';
    out << "versal: " << to_string(s.versality.versal) << '\n';
    out << "stable: " << (s.stable ? "yes" : "no") << '\n';
    for (const auto& line : s.reasons) out << "  " << line << '\n';
    return 0;
  }
  const VersalityReport v = check_versality(F, m);
  if (!o.text_out) {
    print(out, to_json(v));
    return 0;
  }
  out << "family: " << format_poly(F.F()) << '\n';
  out << "versal: " << to_string(v.versal) << " (codim " << codim_text(v.codim) << ", truncation " << v.l_used
      << ")\n";
  for (const auto& line : v.reasons) out << "  " << line << '\n';
  return 0;
}

int cmd_mesh(const Options& o, std::ostream& out, bool wave) {
  const Kind kind = wave ? Kind::Legendrian : Kind::Lagrangian;
  const GeneratingFamily F = read_family(o, kind);
  const NumericConfig cfg = numeric_config(o);
  const Region region = parse_region(o.range, static_cast<std::size_t>(F.n()), wave);
  const DiscriminantMesh mesh = wave ? wavefront(F, region, o.res, cfg) : caustic(F, region, o.res, cfg);
  const MeshFormat fmt = !o.format.empty() ? parse_mesh_format(o.format)
                                           : (o.out_path.empty() ? MeshFormat::Csv : mesh_format_for_path(o.out_path));
  if (o.out_path.empty()) {
    write_mesh(mesh, fmt, out);
    return 0;
  }
  export_mesh(mesh, fmt, o.out_path);
  if (!o.text_out) {
    Json j = mesh_summary(mesh);
    j["out"] = o.out_path;
    print(out, j);
    return 0;
  }
  out << mesh.kind << ": " << mesh.points.size() << " points written to " << o.out_path << '\n';
  for (const auto& s : mesh.strata) out << "  " << s << ": " << mesh.count(s) << '\n';
  return 0;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  const Kind kind = o.legendrian ? Kind::Legendrian : Kind::Lagrangian;
  const auto entries = catalog_list(kind, o.r_filter, o.n_max);
  if (o.json_out) {
    Json arr = Json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    print(out, arr);
    return 0;
  }
  out << "key\tr\tkind\tn\tfamily\n";
  for (const auto& e : entries) {
    out << e.key << '\t' << e.r << '\t' << to_string(e.kind) << '\t' << e.n << '\t' << format_poly(e.family.F())
        << '\n';
  }
  return 0;
}

int cmd_catalog_get(const Options& o, std::ostream& out) {
  const Kind kind = o.legendrian ? Kind::Legendrian : Kind::Lagrangian;
  const CatalogEntry& e = catalog_get(o.catalog_key, kind);
  if (!o.text_out) {
    print(out, to_json(e));
    return 0;
  }
  out << e.key << " (" << to_string(e.kind) << ", r=" << e.r << ", n=" << e.n << ")\n";
  out << "family: " << format_poly(e.family.F()) << '\n';
  out << "class:  " << e.class_label << '\n';
  out << "printed: " << e.printed_label << '\n';
  if (!e.note.empty()) out << "note:   " << e.note << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reticular singularity toolkit: germ classification, unfoldings, caustics and wavefronts",
               "reticular"};
  app.require_subcommand(1);
  Options o;

  auto germ_opts = [&](CLI::App* sub, const char* what, bool required = true) {
    sub->add_option("expr", o.text, what)->required(required);
    sub->add_option("--r", o.r, "corner variables x1..xr (default: highest index used)")->check(CLI::Range(0, 8));
    sub->add_option("--k", o.k, "internal variables y1..yk (default: highest index used)")->check(CLI::Range(0, 16));
    sub->add_flag("--text", o.text_out, "human-readable output");
    sub->add_flag("--json", o.json_out, "JSON output (default)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "recognize the simple class of a germ");
  germ_opts(classify_cmd, "germ");
  classify_cmd->add_option("--mode", o.mode, "R or K")->check(CLI::IsMember({"R", "Rplus", "K"}));

  auto* codim_cmd = app.add_subcommand("codim", "codimension and quotient basis");
  germ_opts(codim_cmd, "germ");
  codim_cmd->add_option("--mode", o.mode, "R, Rplus or K")->check(CLI::IsMember({"R", "Rplus", "K"}));
  codim_cmd->add_option("--cap", o.cap, "truncation cap")->check(CLI::Range(2, 40));

  auto* det_cmd = app.add_subcommand("determinacy", "sufficient finite-determinacy degree");
  germ_opts(det_cmd, "germ");
  det_cmd->add_option("--mode", o.mode, "R or K")->check(CLI::IsMember({"R", "Rplus", "K"}));
  det_cmd->add_option("--cap", o.cap, "largest degree tried")->check(CLI::Range(1, 40));

  auto* unfold_cmd = app.add_subcommand("unfold", "miniversal unfolding of a germ");
  germ_opts(unfold_cmd, "germ");
  unfold_cmd->add_option("--mode", o.mode, "Rplus or K")->check(CLI::IsMember({"R", "Rplus", "K"}));
  unfold_cmd->add_flag("--legendrian", o.legendrian, "map the constant direction to z (needs K)");
  unfold_cmd->add_option("--prefix", o.prefix, "parameter name prefix");

  auto family_opts = [&](CLI::App* sub) {
    germ_opts(sub, "family in x, y, q1..qn, u1.. and z", false);
    sub->add_option("--n", o.n, "parameters q1..qn (default: highest index used)")->check(CLI::Range(0, 16));
    sub->add_option("--catalog", o.catalog_key, "use a catalog family");
  };

  auto* versal_cmd = app.add_subcommand("versal", "infinitesimal versality of a family");
  family_opts(versal_cmd);
  versal_cmd->add_option("--mode", o.mode, "Rplus or K")->check(CLI::IsMember({"R", "Rplus", "K"}));
  versal_cmd->add_flag("--legendrian", o.legendrian, "family carries z");

  auto* stab_cmd = app.add_subcommand("stability", "stability verdict of a generating family");
  family_opts(stab_cmd);
  stab_cmd->add_option("--mode", o.mode, "Rplus or K")->check(CLI::IsMember({"R", "Rplus", "K"}));
  stab_cmd->add_flag("--legendrian", o.legendrian, "family carries z");

  auto mesh_opts = [&](CLI::App* sub) {
    family_opts(sub);
    sub->add_option("--range", o.range, "a:b[,a:b...] per parameter (a single interval applies to all)");
    sub->add_option("--res", o.res, "grid intervals per axis")->check(CLI::Range(1, 100000));
    sub->add_option("--out", o.out_path, "mesh file");
    sub->add_option("--format", o.format, "csv, obj or ply")->check(CLI::IsMember({"csv", "obj", "ply"}));
    sub->add_option("--tol-eq", o.tol_eq, "residual tolerance");
    sub->add_option("--seed-box", o.seed_box, "seed interval a:b for x and y");
    sub->add_option("--config", o.config, "key=value numeric settings");
    sub->add_option("--simd", o.simd, "auto, scalar, avx2 or neon")
        ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
    sub->add_option("--threads", o.threads, "worker threads (0: all cores)")->check(CLI::Range(0, 1024));
  };

  auto* caustic_cmd = app.add_subcommand("caustic", "sample the caustic of a Lagrangian family");
  mesh_opts(caustic_cmd);
  auto* wave_cmd = app.add_subcommand("wavefront", "sample the wavefront of a Legendrian family");
  mesh_opts(wave_cmd);
  wave_cmd->add_flag("--legendrian", o.legendrian, "accepted for symmetry; wavefronts are always Legendrian");

  auto* cat_cmd = app.add_subcommand("catalog", "normal-form tables");
  cat_cmd->require_subcommand(1);
  auto* cat_list = cat_cmd->add_subcommand("list", "list entries as TSV");
  cat_list->add_option("--r", o.r_filter, "only this r")->check(CLI::Range(0, 1));
  cat_list->add_option("--n-max", o.n_max, "largest parameter count");
  cat_list->add_flag("--legendrian", o.legendrian, "Legendrian table");
  cat_list->add_flag("--json", o.json_out, "JSON array instead of TSV");
  auto* cat_get = cat_cmd->add_subcommand("get", "one entry");
  cat_get->add_option("key", o.catalog_key, "entry key")->required();
  cat_get->add_flag("--legendrian", o.legendrian, "Legendrian table");
  cat_get->add_flag("--text", o.text_out, "human-readable output");
  cat_get->add_flag("--json", o.json_out, "JSON output (default)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 1;
  }
  if (o.text_out && o.json_out) {
    err << "error: --text and --json are exclusive\n";
    return 1;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (codim_cmd->parsed()) return cmd_codim(o, out);
    if (det_cmd->parsed()) return cmd_determinacy(o, out);
    if (unfold_cmd->parsed()) return cmd_unfold(o, out);
    if (versal_cmd->parsed()) return cmd_versal(o, out, false);
    if (stab_cmd->parsed()) return cmd_versal(o, out, true);
    if (caustic_cmd->parsed()) return cmd_mesh(o, out, false);
    if (wave_cmd->parsed()) return cmd_mesh(o, out, true);
    if (cat_list->parsed()) return cmd_catalog_list(o, out);
    if (cat_get->parsed()) return cmd_catalog_get(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 1;
}

}  // namespace reticular::cli
