#include "lieform/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "lieform/json_io.hpp"

namespace lieform {

namespace {

struct JobSpec {
  std::string command;
  std::string cartan_source;  // inline JSON or a file path
  std::string catalog;
  std::string u_source = "zero";  // "zero" | "random[:seed]" | inline JSON | file path
  std::optional<std::uint64_t> seed;
  std::string format = "json";  // json | text
  std::string out_path;         // empty = stdout
  std::string algebra = "d";    // table command: g | d
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON for " + what + ": " + e.what());
  }
}

bool looks_inline(const std::string& s) {
  return !s.empty() && (s.front() == '[' || s.front() == '{');
}

std::vector<std::vector<int>> load_cartan_grid(const JobSpec& spec) {
  if (spec.cartan_source.empty())
    throw ParseError("no Cartan matrix given; use --catalog or --cartan");
  const std::string text =
      looks_inline(spec.cartan_source) ? spec.cartan_source : read_file(spec.cartan_source);
  return cartan_grid_from_json(parse_json_text(text, "the Cartan matrix"));
}

CartanMatrix load_cartan(const JobSpec& spec) {
  if (!spec.catalog.empty()) return CartanMatrix::catalog(spec.catalog);
  return CartanMatrix::validate(load_cartan_grid(spec));
}

UMatrix load_u(const JobSpec& spec, int n, std::string& desc) {
  const std::string& src = spec.u_source;
  if (src == "zero") {
    desc = "zero";
    return UMatrix::zero(n);
  }
  if (src.rfind("random", 0) == 0) {
    std::optional<std::uint64_t> seed = spec.seed;
    if (src.size() > 6) {
      if (src[6] != ':') throw ParseError("u source must be 'random' or 'random:<seed>'");
      try {
        seed = std::stoull(src.substr(7));
      } catch (const std::exception&) {
        throw ParseError("invalid seed in '" + src + "'");
      }
    }
    if (!seed) throw ParseError("random u needs an explicit seed (--seed or random:<seed>)");
    desc = "random:" + std::to_string(*seed);
    return UMatrix::random(n, *seed);
  }
  const bool is_inline = looks_inline(src);
  desc = is_inline ? "inline" : "file:" + src;
  const std::string text = is_inline ? src : read_file(src);
  UMatrix u = u_from_json(parse_json_text(text, "the u matrix"));
  if (u.n() != n) throw ParseError("u matrix rank does not match the Cartan matrix");
  return u;
}

void emit(const JobSpec& spec, const std::string& body, std::ostream& out) {
  if (spec.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(spec.out_path, std::ios::binary);
  if (!f) throw ParseError("cannot write to '" + spec.out_path + "'");
  f << body;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string render_text(const Json& j);  // below

void emit_report(const JobSpec& spec, const Json& j, std::ostream& out) {
  emit(spec, spec.format == "text" ? render_text(j) : render_json(j), out);
}

Json error_json(const Error& e) {
  Json j = Json::object();
  j["error"] = Json{{"kind", e.kind}, {"message", e.what()}};
  return j;
}

Json check_json(const Report& r) { return report_json(r); }

Json check_json(const std::string& name, bool ok, const std::string& detail) {
  Report r{name, 1, {}};
  if (!ok) r.violations.push_back(detail);
  return report_json(r);
}

Json inputs_json(const JobSpec& spec, const CartanMatrix& c) {
  Json j = Json::object();
  if (!spec.catalog.empty()) j["type"] = spec.catalog;
  j["cartan"] = c.grid();
  j["symmetrizer"] = c.symmetrizer();
  return j;
}

// ---- commands -------------------------------------------------------------

int cmd_classify(const JobSpec& spec, std::ostream& out) {
  Json j = Json::object();
  j["command"] = "classify";
  try {
    const CartanMatrix c = load_cartan(spec);
    j["type_ok"] = true;
    j["rank"] = c.rank();
    j["symmetrizer"] = c.symmetrizer();
    emit_report(spec, j, out);
    return 0;
  } catch (const NotGCM& e) {
    j["type_ok"] = false;
    j["error"] = Json{{"kind", e.kind}, {"message", e.what()}};
  } catch (const NotIndecomposable& e) {
    j["type_ok"] = false;
    j["error"] = Json{{"kind", e.kind}, {"message", e.what()}};
  } catch (const NotSymmetrizable& e) {
    j["type_ok"] = false;
    j["error"] = Json{{"kind", e.kind}, {"message", e.what()}};
  } catch (const NotFiniteType& e) {
    j["type_ok"] = false;
    j["error"] = Json{{"kind", e.kind}, {"message", e.what()}};
  }
  emit_report(spec, j, out);
  return 1;
}

int cmd_roots(const JobSpec& spec, std::ostream& out) {
  const CartanMatrix c = load_cartan(spec);
  const RootSystem rs(c);
  Json j = Json::object();
  j["command"] = "roots";
  j.update(inputs_json(spec, c));
  j.update(roots_json(rs));
  emit_report(spec, j, out);
  return 0;
}

int cmd_table(const JobSpec& spec, std::ostream& out) {
  const CartanMatrix c = load_cartan(spec);
  const GAlgebra g(c);
  Json j = Json::object();
  j["command"] = "table";
  if (!spec.catalog.empty()) j["type"] = spec.catalog;
  if (spec.algebra == "g") {
    j.update(table_json(g));
  } else if (spec.algebra == "d") {
    std::string u_desc;
    const UMatrix u = load_u(spec, c.rank(), u_desc);
    const DAlgebra d(g, u);
    j["u_source"] = u_desc;
    j.update(table_json(d));
  } else {
    throw ParseError("--algebra must be 'g' or 'd'");
  }
  emit_report(spec, j, out);
  return 0;
}

int cmd_verify(const JobSpec& spec, std::ostream& out) {
  const CartanMatrix c = load_cartan(spec);
  std::string u_desc;
  const UMatrix u = load_u(spec, c.rank(), u_desc);

  const GAlgebra g(c);  // throws JacobiViolation if the table were inconsistent
  const DAlgebra d(g, u);

  Json j = Json::object();
  j["command"] = "verify";
  j.update(inputs_json(spec, c));
  j["u"] = u_json(u);
  j["u_source"] = u_desc;
  j["root_count"] = d.root_system().size();
  j["dim_g"] = g.dim();
  j["dim_d"] = d.dim();
  j["rad_u_dim"] = static_cast<int>(rad_u(c, u).size());
  j["gram_det"] = rat_json(d.gram_det());

  Json checks = Json::array();
  bool all_ok = true;
  auto push = [&](Json cj) {
    all_ok = all_ok && cj.at("ok").get<bool>();
    checks.push_back(std::move(cj));
  };

  {
    Report r = verify_jacobi_table(g.table());
    r.check = "jacobi_g";
    push(check_json(r));
  }
  push(check_json(verify_serre(g)));
  push(check_json(verify_coroot_identity(g)));
  {
    Report r = verify_jacobi(d);
    r.check = "jacobi_d";
    push(check_json(r));
  }
  {
    Report r = verify_invariance(d);
    r.check = "invariance_d";
    push(check_json(r));
  }
  push(check_json(verify_reduction(d)));

  const Subspace l = ideal_l(d);
  const Subspace m = ideal_m(d);
  push(check_json("l_is_ideal", is_ideal(d, l), "l is not an ideal"));
  {
    const auto series = derived_series(d, l);
    const bool ok = series.back().dim() == 0 && series.size() <= 2;
    push(check_json("l_abelian", ok, "derived series of l is not [l, 0]"));
  }
  push(check_json("m_is_ideal", is_ideal(d, m), "m is not an ideal"));
  push(check_json("m_dim", m.dim() == d.root_system().size() + c.rank(),
                  "dim m != |roots| + rank"));
  push(check_json(iso_m_to_g(d, g)));

  const Subspace kr = killing_radical(d);
  push(check_json("killing_contains_l", kr.contains(l), "Killing radical does not contain l"));
  if (u.zero_matrix()) {
    push(check_json("killing_equals_l", kr == l, "Killing radical differs from l at u = 0"));
    push(check_json(quotient_iso_u0(d, g)));
  }

  j["checks"] = std::move(checks);
  j["all_ok"] = all_ok;
  emit_report(spec, j, out);
  return all_ok ? 0 : 1;
}

int cmd_structure(const JobSpec& spec, std::ostream& out) {
  const CartanMatrix c = load_cartan(spec);
  std::string u_desc;
  const UMatrix u = load_u(spec, c.rank(), u_desc);
  const GAlgebra g(c);
  const DAlgebra d(g, u);

  Json j = Json::object();
  j["command"] = "structure";
  j.update(inputs_json(spec, c));
  j["u"] = u_json(u);
  j["u_source"] = u_desc;
  j["dim_d"] = d.dim();

  const auto rad = rad_u(c, u);
  Json rad_j = Json::array();
  for (const Weight& w : rad) {
    Json row = Json::array();
    for (const Rat& x : w.c) row.push_back(rat_json(x));
    rad_j.push_back(std::move(row));
  }
  j["rad_u"] = Json{{"dim", static_cast<int>(rad.size())}, {"basis", std::move(rad_j)}};

  const Subspace l = ideal_l(d);
  const Subspace m = ideal_m(d);
  const Subspace kr = killing_radical(d);

  auto series_dims = [&](const Subspace& s) {
    Json dims = Json::array();
    for (const Subspace& step : derived_series(d, s)) dims.push_back(step.dim());
    return dims;
  };

  Json lj = subspace_json(l);
  lj["is_ideal"] = is_ideal(d, l);
  lj["derived_series_dims"] = series_dims(l);
  j["ideal_l"] = std::move(lj);

  Json mj = subspace_json(m);
  mj["is_ideal"] = is_ideal(d, m);
  mj["derived_series_dims"] = series_dims(m);
  j["ideal_m"] = std::move(mj);

  Json kj = subspace_json(kr);
  kj["contains_l"] = kr.contains(l);
  kj["equals_l"] = kr == l;
  j["killing_radical"] = std::move(kj);

  j["gram_det"] = rat_json(d.gram_det());
  emit_report(spec, j, out);
  return 0;
}

int dispatch(const JobSpec& spec, std::ostream& out);

int cmd_job(JobSpec spec, std::istream& in, std::ostream& out, const std::string& path) {
  const std::string text = (path == "-" || path.empty())
                               ? std::string(std::istreambuf_iterator<char>(in), {})
                               : read_file(path);
  const Json j = parse_json_text(text, "the job spec");
  if (!j.is_object()) throw ParseError("job spec must be a JSON object");
  if (!j.contains("command") || !j.at("command").is_string())
    throw ParseError("job spec needs a \"command\" string");
  spec.command = j.at("command").get<std::string>();
  if (j.contains("catalog")) spec.catalog = j.at("catalog").get<std::string>();
  if (j.contains("cartan")) spec.cartan_source = j.at("cartan").dump();
  if (j.contains("u")) {
    const Json& ju = j.at("u");
    spec.u_source = ju.is_string() ? ju.get<std::string>() : ju.dump();
  }
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("format")) spec.format = j.at("format").get<std::string>();
  if (j.contains("out")) spec.out_path = j.at("out").get<std::string>();
  if (j.contains("algebra")) spec.algebra = j.at("algebra").get<std::string>();
  return dispatch(spec, out);
}

int dispatch(const JobSpec& spec, std::ostream& out) {
  if (spec.command == "classify") return cmd_classify(spec, out);
  if (spec.command == "roots") return cmd_roots(spec, out);
  if (spec.command == "table") return cmd_table(spec, out);
  if (spec.command == "verify") return cmd_verify(spec, out);
  if (spec.command == "structure") return cmd_structure(spec, out);
  throw ParseError("unknown command '" + spec.command + "'");
}

// ---- text rendering ---------------------------------------------------------

void render_text_value(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text_value(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    os << prefix << ": " << j.dump() << "\n";
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  if (j.contains("checks")) {
    for (const auto& [k, v] : j.items()) {
      if (k == "checks") continue;
      render_text_value(v, k, os);
    }
    for (const Json& cj : j.at("checks")) {
      os << "check " << cj.at("name").get<std::string>() << ": "
         << (cj.at("ok").get<bool>() ? "ok" : "FAIL") << " ("
         << cj.at("cases_checked").dump() << " cases)\n";
      for (const Json& v : cj.at("violations")) os << "  violation: " << v.get<std::string>() << "\n";
    }
  } else {
    render_text_value(j, "", os);
  }
  return os.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact construction and verification of a deformed Lie algebra"};
  app.name("lieform");
  app.require_subcommand(1);

  JobSpec spec;
  std::string job_path = "-";

  auto add_common = [&](CLI::App* cmd, bool with_u) {
    cmd->add_option("--cartan", spec.cartan_source,
                    "Cartan matrix as inline JSON [[2,-1],[-1,2]] or a file path");
    cmd->add_option("--catalog", spec.catalog,
                    "catalog name (A1..A8, B2..B8, C3..C8, D4..D8, E6..E8, F4, G2; "
                    "Bourbaki node numbering)");
    if (with_u) {
      cmd->add_option("--u", spec.u_source,
                      "u matrix: 'zero', 'random' (with --seed), 'random:<seed>', "
                      "inline JSON [[\"0\",\"1\"],[\"-1\",\"0\"]], or a file path");
      cmd->add_option("--seed", spec.seed, "seed for --u random");
    }
    cmd->add_option("--format", spec.format, "output format: json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", spec.out_path, "write the report to this file instead of stdout");
  };

  add_common(app.add_subcommand("classify", "validate a Cartan matrix and report its symmetrizer"),
             false);
  add_common(app.add_subcommand("roots", "list the root system"), false);
  CLI::App* table = app.add_subcommand("table", "emit the bracket table and Gram matrix");
  add_common(table, true);
  table->add_option("--algebra", spec.algebra, "which algebra to export: g or d (default d)")
      ->check(CLI::IsMember({"g", "d"}));
  add_common(app.add_subcommand("verify", "run every verification and report pass/fail"), true);
  add_common(app.add_subcommand("structure", "report rad(u), the ideals, series, Killing radical"),
             true);
  CLI::App* job = app.add_subcommand("job", "run a JSON job spec from a file or stdin");
  job->add_option("file", job_path, "job spec path, or '-' for stdin");

  std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    if (sub->get_name() == "job") return cmd_job(spec, in, out, job_path);
    spec.command = sub->get_name();
    return dispatch(spec, out);
  } catch (const JacobiViolation& e) {
    emit(spec, render_json(error_json(e)), out);
    return 1;
  } catch (const Error& e) {
    emit(spec, render_json(error_json(e)), out);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lieform
