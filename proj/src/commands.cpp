#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lcklab/classify.hpp"
#include "lcklab/cli.hpp"
#include "lcklab/error.hpp"
#include "lcklab/io.hpp"
#include "lcklab/report.hpp"
#include "lcklab/search.hpp"

namespace lcklab {

namespace {

std::string vector_text(const Vector& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    const Rational a = neg ? Rational(-v[i]) : v[i];
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (a != 1) os << to_string(a) << " ";
    os << labels[i];
    first = false;
  }
  return first ? "0" : os.str();
}

const Cochain& require_form(const AlgebraFile& f, const std::string& name, std::size_t degree) {
  const auto it = f.forms.find(name);
  if (it == f.forms.end()) throw Error(ErrorCode::ParseError, "form '" + name + "' not in file");
  if (it->second.degree() != degree)
    throw Error(ErrorCode::ParseError, "form '" + name + "' has degree " + std::to_string(it->second.degree()));
  return it->second;
}

Report cmd_check(const AlgebraFile& f, const std::string& omega_name, const std::string& theta_name) {
  Report r("check");
  const auto& g = f.algebra;
  if (!f.J) throw Error(ErrorCode::ParseError, "file has no J");
  const Cochain& omega = require_form(f, omega_name, 2);
  const bool has_theta = f.forms.count(theta_name) > 0;
  const auto lck0 = has_theta ? std::optional<Cochain>() : lee_form_from_omega(g, omega);
  if (!has_theta && !lck0) throw Error(ErrorCode::ParseError, "no θ given and θ∧Ω = dΩ has no solution");
  const Cochain theta = has_theta ? require_form(f, theta_name, 1) : *lck0;

  const LckReport rep = check_lck(g, omega, theta, *f.J);
  r.value("algebra", f.name);
  r.value("θ", format_cochain(theta, g.labels()) + (has_theta ? "" : " (computed)"));
  for (const auto& it : rep.items) r.item(it.name, it.pass, it.detail);
  if (rep.computed_theta) {
    r.value("computed Lee form", format_cochain(*rep.computed_theta, g.labels()));
    r.value("given θ matches computed", *rep.computed_theta == theta ? "yes" : "no");
  } else {
    r.value("computed Lee form", "none");
  }
  if (rep.lee) {
    r.value("Lee field ξ", vector_text(rep.lee->xi, g.labels()));
    r.value("|θ|²", to_string(rep.lee->norm_sq));
  }
  if (rep.reeb) {
    r.value("Reeb sign ε", rep.reeb->epsilon > 0 ? "+1" : "-1");
    r.value("Reeb field η", vector_text(rep.reeb->eta, g.labels()));
    r.value("Reeb form φ", format_cochain(rep.reeb->phi, g.labels()));
    r.value("Ω = −θ∧φ + dφ", "holds");
    if (rep.dphi_in_kernel) r.value("ι_ξ dφ = ι_η dφ = 0", *rep.dphi_in_kernel ? "yes" : "no");
  } else if (!rep.reeb_failure.empty()) {
    r.value("Ω = −θ∧φ + dφ", "fails for both signs of η");
  }
  if (rep.vaisman) r.value("Vaisman", *rep.vaisman ? "yes" : "no");
  r.set_exit_code(rep.pass() ? 0 : 1);
  return r;
}

Report cmd_cohomology(const AlgebraFile& f, const std::string& theta_name, const std::string& p_text) {
  Report r("cohomology");
  const auto& g = f.algebra;
  const Cochain theta = theta_name == "0" ? Cochain(g.dim(), 1) : require_form(f, theta_name, 1);
  r.value("θ", format_cochain(theta, g.labels()));
  std::vector<std::size_t> dims;
  std::size_t from = 0;
  try {
    if (p_text == "all") {
      dims = twisted_cohomology_dims(g, theta);
    } else {
      std::size_t p = 0;
      try {
        p = std::stoul(p_text);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "--p expects an integer or 'all'");
      }
      if (p > g.dim()) throw Error(ErrorCode::ParseError, "--p exceeds the dimension");
      dims = {twisted_cohomology_dim(g, theta, p)};
      from = p;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LeeFormNotClosed) throw;
    r.item("dθ = 0", false, e.what());
    r.set_exit_code(1);
    return r;
  }
  for (std::size_t i = 0; i < dims.size(); ++i)
    r.value("dim H^" + std::to_string(from + i) + "_θ", std::to_string(dims[i]));
  return r;
}

Report cmd_classify(const AlgebraFile& f) {
  Report r("classify");
  const ClassLabel label = classify4(f.algebra);
  r.value("algebra", f.name);
  r.value("label", to_string(label.tag));
  if (!label.char_poly.empty()) r.value("char poly", to_string(label.char_poly));
  if (label.scale_invariant) r.value("scale invariant", to_string(*label.scale_invariant));
  if (label.killing_inertia) {
    const auto& in = *label.killing_inertia;
    r.value("Killing inertia on [g,g] (+,-,0)",
            "(" + std::to_string(in[0]) + "," + std::to_string(in[1]) + "," + std::to_string(in[2]) + ")");
  }
  if (!label.note.empty()) r.value("note", label.note);
  const LatticeVerdict lv = lattice_verdict(label.tag);
  r.value("lattice", to_string(lv.verdict));
  r.value("lattice reason", lv.reason);
  return r;
}

Report cmd_search(const AlgebraFile& f, const GridSpec& grid, bool use_file_j) {
  Report r("search");
  SearchOptions opts;
  opts.grid = grid;
  const SearchResult res = lck_search(f.algebra, use_file_j ? f.J : std::nullopt, opts);
  const auto& labels = f.algebra.labels();
  r.value("grid", grid.to_string());
  r.value("J candidates", use_file_j && f.J ? "from file" : "coordinate structures");
  if (res.witness) {
    r.value("result", "witness found");
    r.value("Ω", format_cochain(res.witness->omega, labels));
    r.value("θ", format_cochain(res.witness->theta, labels));
    r.value("J", res.witness->J.to_string());
    const LckReport rep = check_lck(f.algebra, res.witness->omega, res.witness->theta, res.witness->J);
    r.item("witness passes check_lck", rep.pass());
    r.set_exit_code(rep.pass() ? 0 : 1);
  } else {
    r.value("result", kNoWitness);
    r.message(res.summary());
    r.set_exit_code(1);
  }
  return r;
}

Report cmd_double_root(long m, long n) {
  Report r("double-root");
  const DoubleRootQuery q{m, n};
  r.value("Φ(t)", to_string(double_root_polynomial(q)));
  const auto root = double_root_test(q);
  r.value("double root", root ? to_string(*root) : "none");
  const auto oracle = double_root_numeric_oracle(q);
  r.value("numeric oracle", oracle.confirmed ? std::to_string(*oracle.confirmed) : "none");
  const bool agree = root ? (oracle.confirmed && Rational(*oracle.confirmed) == *root) : !oracle.confirmed;
  r.item("gcd and numeric oracle agree", agree);
  r.set_exit_code(agree ? 0 : 1);
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();
  CLI::App app{"Exact computations with locally conformally Kähler Lie algebras", "lck-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  int threads = 0;
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--threads", threads, "worker bound (overrides LCK_LAB_THREADS)");

  std::string file, omega_name = "Omega", theta_name = "theta", p_text = "all", grid_text = "-3:3:1/2", key,
              output;
  long m = 0, n = 0;
  bool coordinate_j = false;

  auto* check = app.add_subcommand("check", "verify the l.c.K. conditions of a file");
  check->add_option("file", file)->required();
  check->add_option("--omega", omega_name, "name of the 2-form");
  check->add_option("--theta", theta_name, "name of the Lee form (computed from Ω when absent)");

  auto* coh = app.add_subcommand("cohomology", "twisted cohomology dimensions");
  coh->add_option("file", file)->required();
  coh->add_option("--theta", theta_name, "name of a closed 1-form, or 0");
  coh->add_option("--p", p_text, "degree or 'all'");

  auto* cls = app.add_subcommand("classify", "label a 4-dimensional algebra");
  cls->add_option("file", file)->required();

  auto* cat = app.add_subcommand("catalog", "list or emit catalog entries");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "print every catalog key");
  auto* cat_emit = cat->add_subcommand("emit", "write an algebra file");
  cat_emit->add_option("key", key)->required();
  cat_emit->add_option("-o,--output", output, "path (stdout when omitted)");

  auto* search = app.add_subcommand("search", "look for an l.c.K. structure on a grid");
  search->add_option("file", file)->required();
  search->add_option("--grid", grid_text, "lo:hi:step for closed 1-form coefficients");
  search->add_flag("--coordinate-j", coordinate_j, "ignore the file's J and try the coordinate candidates");

  auto* dr = app.add_subcommand("double-root", "double real root of t^3 - m t^2 + n t - 1");
  dr->add_option("--m", m)->required();
  dr->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (threads > 0) set_thread_limit(threads);

  auto finish = [&](const Report& r) {
    out << (format == "machine" ? r.emit_machine() : r.render_human());
    return r.exit_code();
  };

  try {
    if (*cat) {
      if (*cat_list) {
        Report r("catalog list");
        for (const auto& k : catalog_keys()) r.message(k.to_string());
        return finish(r);
      }
      const std::string text = emit_algebra_file(to_algebra_file(build(CatalogKey::parse(key))));
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream o(output, std::ios::binary);
        if (!o) throw Error(ErrorCode::ParseError, output + ": cannot write");
        o << text;
      }
      return 0;
    }
    if (*dr) return finish(cmd_double_root(m, n));

    const AlgebraFile f = read_algebra_file(file);
    if (*check) return finish(cmd_check(f, omega_name, theta_name));
    if (*coh) return finish(cmd_cohomology(f, theta_name, p_text));
    if (*cls) return finish(cmd_classify(f));
    if (*search) return finish(cmd_search(f, GridSpec::parse(grid_text), !coordinate_j));
  } catch (const Error& e) {
    if (format == "machine") {
      Report r("error");
      r.message(e.what());
      r.set_exit_code(2);
      out << r.emit_machine();
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lcklab
