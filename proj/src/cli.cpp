#include "gstruct/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "gstruct/catalog.hpp"
#include "gstruct/io.hpp"
#include "gstruct/random.hpp"
#include "gstruct/twistor.hpp"

namespace gstruct {

namespace {

struct Options {
  std::string report = "text";
  std::uint64_t seed = 1;
  std::vector<std::string> samples;
  bool color = false;
};

std::string mark(bool pass, bool color) {
  if (!color) return pass ? "PASS" : "FAIL";
  return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

void print_text(std::ostream& out, const Report& r, bool color) {
  out << "== " << r.subject << "\n";
  for (const auto& c : r.checks) {
    out << "  " << mark(c.pass, color) << "  " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (c.witness && !c.pass) out << "        witness " << to_string(*c.witness) << "\n";
  }
  out << r.subject << ": " << mark(r.all_pass(), color) << " (" << r.checks.size() << " checks, "
      << r.failures() << " failed)\n";
}

std::vector<Rational> parse_samples(const std::vector<std::string>& text) {
  if (text.empty()) return default_curve_samples();
  std::vector<Rational> out;
  for (const auto& t : text) out.push_back(parse_rational(t));
  return out;
}

int emit(std::ostream& out, const Options& o, const std::vector<Report>& reports, json extra = {}) {
  bool pass = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.all_pass(); });
  if (o.report == "json") {
    json j;
    if (reports.size() == 1 && extra.is_null()) {
      j = report_to_json(reports.front());
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      j = {{"pass", pass}, {"reports", std::move(arr)}};
      if (!extra.is_null()) j.update(extra);
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_text(out, r, o.color);
    if (reports.size() > 1) {
      const auto ok = std::count_if(reports.begin(), reports.end(),
                                    [](const Report& r) { return r.all_pass(); });
      out << ok << "/" << reports.size() << " reports pass\n";
    }
  }
  return pass ? exit_pass : exit_fail;
}

int cmd_verify(std::ostream& out, const Options& o, const std::string& algebra_file,
               const std::string& metric_file, const std::string& structure_file,
               int covariance_samples) {
  const LieAlgebra L = algebra_from_json(load_json(algebra_file));
  const PseudoMetric metric = metric_from_json(load_json(metric_file));
  if (metric.dim() != L.dim()) throw DimensionError("metric and algebra dimensions differ");
  const StructureFile f = structure_from_json(load_json(structure_file), L.dim());
  const GenStructure S = structure_matrix(f, metric);

  Report r;
  r.subject = "verify " + structure_file;
  const Report algebraic = verify_algebraic(S, metric);
  r.merge(algebraic, "axiom");
  if (f.A) {
    r.merge(check_classical(make_classical(*f.A, *f.B, f.lambda, f.ell, metric), f.lambda, f.ell,
                            metric),
            "classical");
  }
  const LieAlgebra T = cotangent_algebra(L);
  if (algebraic.all_pass()) {
    if (S.lambda() == 1) {
      r.merge(paracomplex_integrability(T, S), "integrability");
    } else {
      const NijenhuisReport N = nijenhuis_integrability(T, S);
      std::optional<RMatrix> witness;
      std::string detail = std::to_string(N.pairs_checked) + " basis pairs, " +
                           std::to_string(N.nonzero.size()) + " nonzero";
      if (!N.integrable()) {
        const auto& w = N.nonzero.front();
        detail += "; first at (" + T.labels()[w.a] + "," + T.labels()[w.b] + ")";
        witness = from_columns({w.value});
      }
      r.add("integrability.nijenhuis", N.integrable(), detail, witness);
    }
  } else {
    r.add("integrability", false, "not evaluated: algebraic axioms fail");
  }
  if (covariance_samples > 0) {
    Sampler rng(o.seed);
    const ExtendedSpace E = build_extended(metric, S.k());
    const auto algebra = symmetry_algebra(E);
    int agree = 0;
    for (int i = 0; i < covariance_samples; ++i) {
      const GenStructure moved = conjugate(S, rng.symmetry(algebra, 2 * L.dim()));
      agree += verify_algebraic(moved, E).all_pass() == algebraic.all_pass() ? 1 : 0;
    }
    r.add("covariance", agree == covariance_samples,
          std::to_string(agree) + "/" + std::to_string(covariance_samples) +
              " conjugates by symmetries of b_k agree (seed " + std::to_string(o.seed) + ")");
  }
  return emit(out, o, {r});
}

int cmd_catalog(std::ostream& out, const Options& o, const std::string& name, bool all) {
  if (all == !name.empty()) throw ParseError("give an entry name or --all");
  const auto samples = parse_samples(o.samples);
  std::vector<Report> reports;
  for (const auto& n : all ? catalog_names() : std::vector<std::string>{name}) {
    reports.push_back(verify_entry(catalog_get(n), samples));
  }
  return emit(out, o, reports);
}

int cmd_interpolate(std::ostream& out, const Options& o, const std::string& name, int epsilon,
                    const std::string& s_text) {
  const CatalogEntry entry = catalog_get(name);
  if (entry.curves.empty()) throw ValidationError("entry '" + name + "' has no curve");
  if (epsilon != 1 && epsilon != -1) throw ParseError("epsilon must be 1 or -1");
  const Rational s = parse_rational(s_text);
  const GenStructure phi = entry_structure(entry, epsilon, s);
  const LieAlgebra T = cotangent_algebra(entry.algebra);

  Report r;
  r.subject = "interpolate " + name + " eps=" + (epsilon > 0 ? "+1" : "-1") + " s=" + to_string(s);
  r.merge(verify_algebraic(phi, entry.metric), "axiom");
  std::vector<std::size_t> dims;
  for (int delta : {1, -1}) {
    const InvolutivityResult inv = eigenspace_involutivity(T, phi, delta);
    dims.push_back(inv.basis.vectors.size());
    r.add(std::string("D(") + (delta > 0 ? "+1" : "-1") + ").involutive", inv.involutive,
          "dim " + std::to_string(inv.basis.vectors.size()));
  }
  const Weierstrass w = weierstrass(s);
  if (o.report == "json") {
    json j{{"entry", name},
           {"epsilon", epsilon},
           {"s", to_string(s)},
           {"cos", to_string(w.cos)},
           {"sin", to_string(w.sin)},
           {"phi", matrix_to_json(phi.matrix())},
           {"eigenspace_dims", {{"+1", dims[0]}, {"-1", dims[1]}}},
           {"report", report_to_json(r)}};
    out << j.dump(2) << "\n";
  } else {
    out << "cos t = " << to_string(w.cos) << ", sin t = " << to_string(w.sin) << "\n";
    out << "Phi = " << to_string(phi.matrix()) << "\n";
    out << "dim D(+1) = " << dims[0] << ", dim D(-1) = " << dims[1] << "\n";
    print_text(out, r, o.color);
  }
  return r.all_pass() ? exit_pass : exit_fail;
}

int cmd_export(std::ostream& out, const std::string& name, const std::string& dir, int epsilon,
               const std::string& s_text) {
  const CatalogEntry entry = catalog_get(name);
  const ExportBundle b = export_entry(entry, epsilon, parse_rational(s_text));
  if (dir.empty()) {
    json j{{"algebra", b.algebra}, {"metric", b.metric}, {"structure", b.structure}};
    out << j.dump(2) << "\n";
    return exit_pass;
  }
  std::filesystem::create_directories(dir);
  for (const auto& [suffix, j] : {std::pair<std::string, const json*>{"algebra", &b.algebra},
                                  {"metric", &b.metric},
                                  {"structure", &b.structure}}) {
    const auto path = std::filesystem::path(dir) / (name + "." + suffix + ".json");
    std::ofstream file(path);
    if (!file) throw ParseError("cannot write " + path.string());
    file << j->dump(2) << "\n";
    out << path.string() << "\n";
  }
  return exit_pass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool color) {
  CLI::App app{"Exact verification of generalized (para)complex structures compatible with a "
               "metric on Lie algebras",
               "gstruct"};
  app.require_subcommand(1);
  Options o;
  o.color = color;
  app.add_option("--report", o.report, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();

  std::string algebra_file, metric_file, structure_file;
  int covariance = 0;
  auto* verify = app.add_subcommand("verify", "Verify a structure given by algebra, metric and structure files");
  verify->add_option("algebra", algebra_file, "Algebra JSON")->required();
  verify->add_option("metric", metric_file, "Metric JSON")->required();
  verify->add_option("structure", structure_file, "Structure JSON")->required();
  verify->add_option("--covariance-samples", covariance,
                     "Also verify this many random conjugates by symmetries of b_k")
      ->check(CLI::NonNegativeNumber);

  std::string name;
  bool all = false;
  auto* catalog = app.add_subcommand("catalog", "Reproduce the claims about built-in examples");
  catalog->add_option("name", name, "Entry name")->check(CLI::IsMember(catalog_names()));
  catalog->add_flag("--all", all, "Verify every entry");
  catalog->add_option("--curve-samples", o.samples, "Comma separated rational curve parameters")
      ->delimiter(',');

  int epsilon = 1;
  std::string s_text = "0";
  auto* interpolate = app.add_subcommand("interpolate", "Evaluate cos t R + sin t Q_eps at t = 2 atan(s)");
  interpolate->add_option("entry", name, "Entry with a curve")->required();
  interpolate->add_option("--epsilon", epsilon, "Sign of the curve family")->check(CLI::IsMember({1, -1}));
  interpolate->add_option("--s", s_text, "Rational Weierstrass parameter");

  std::string out_dir;
  auto* exporter = app.add_subcommand("export", "Write an entry as algebra/metric/structure files");
  exporter->add_option("name", name, "Entry name")->required()->check(CLI::IsMember(catalog_names()));
  exporter->add_option("--out-dir", out_dir, "Directory for the three files (stdout if omitted)");
  exporter->add_option("--epsilon", epsilon, "Curve family for entries without a fixed structure")
      ->check(CLI::IsMember({1, -1}));
  exporter->add_option("--s", s_text, "Curve parameter for entries without a fixed structure");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(out, o, algebra_file, metric_file, structure_file, covariance);
    }
    if (catalog->parsed()) return cmd_catalog(out, o, name, all);
    if (interpolate->parsed()) return cmd_interpolate(out, o, name, epsilon, s_text);
    return cmd_export(out, name, out_dir, epsilon, s_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return exit_usage;
}

}  // namespace gstruct
