#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffcensus/arith.hpp"
#include "ffcensus/cli.hpp"
#include "ffcensus/lseries.hpp"

namespace ffcensus::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string range_text(const std::optional<NRange>& r) {
  if (!r) return "";
  return std::to_string(r->lo) + ".." + std::to_string(r->hi);
}

Json config_json(const RunConfig& cfg, const std::string& command) {
  Json c;
  c["command"] = command;
  c["field"] = cfg.field_spec;
  c["k"] = cfg.k_spec ? Json(*cfg.k_spec) : Json(nullptr);
  c["l"] = cfg.l_spec;
  c["n"] = range_text(cfg.n_range);
  c["primes_only"] = cfg.primes_only;
  c["budget"] = cfg.budget;
  c["format"] = cfg.format;
  c["suite"] = cfg.suite;
  if (!cfg.poly_arg.empty()) c["poly"] = cfg.poly_arg;
  return c;
}

Json report_json(const RunConfig& cfg, const std::string& command) {
  Json j;
  j["config"] = config_json(cfg, command);
  j["rows"] = Json::array();
  j["suites"] = Json::array();
  return j;
}

void require_n_within_budget(const Field& field, const NRange& range, std::uint64_t budget) {
  monic_count_within(*field, range.lo, budget);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Field field = FieldCtx::parse(cfg.field_spec);
  SuiteInput in{field, std::nullopt, cfg.n_range.value_or(NRange{1, 6}), cfg.primes_only, {cfg.budget, cfg.threads}};
  if (cfg.k_spec) {
    Poly k = parse_poly(field, *cfg.k_spec);
    if (!k.is_monic()) throw InputError("k must be monic");
    in.k = std::move(k);
  }
  require_n_within_budget(field, in.n, cfg.budget);

  std::vector<std::string> selected;
  if (cfg.suite == "all") {
    selected = suite_names();
  } else {
    selected.push_back(cfg.suite);
  }
  std::vector<SuiteResult> results;
  for (const std::string& name : selected) results.push_back(run_suite(name, in));

  bool all_pass = true;
  if (cfg.format == "json") {
    Json j = report_json(cfg, "verify");
    for (const SuiteResult& r : results) {
      j["suites"].push_back({{"name", r.name}, {"pass", r.pass()}, {"checked", r.checked}, {"failed", r.failed}});
      all_pass = all_pass && r.pass();
    }
    out << j.dump(2) << '\n';
  } else {
    for (const SuiteResult& r : results) {
      out << (r.pass() ? "PASS " : "FAIL ") << r.name << ' ' << (r.checked - r.failed) << '/' << r.checked << '\n';
      for (const std::string& note : r.notes) out << "  " << note << '\n';
      all_pass = all_pass && r.pass();
    }
  }
  return all_pass ? kExitOk : kExitViolation;
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field field = FieldCtx::parse(cfg.field_spec);
  if (!cfg.k_spec) throw InputError("census needs --k");
  if (!cfg.n_range) throw InputError("census needs --n");
  const Poly k = parse_poly(field, *cfg.k_spec);
  if (!k.is_monic()) throw InputError("k must be monic");
  require_n_within_budget(field, *cfg.n_range, cfg.budget);

  std::vector<Poly> ls;
  if (cfg.l_spec == "all-units") {
    ls = unit_residues(k);
  } else {
    const Poly l = parse_poly(field, cfg.l_spec);
    if (!gcd(l, k).is_one()) throw InputError("l not coprime to k");
    ls.push_back(reduce_residue(l, k));
  }

  const ScanOptions opts{cfg.budget, cfg.threads};
  std::vector<CensusRow> rows;
  for (unsigned n : selected_degrees(*cfg.n_range, cfg.primes_only)) {
    if (n == 0) continue;
    for (CensusRow& row : census_rows(ls, k, n, opts)) rows.push_back(std::move(row));
  }

  bool all_within = true;
  if (cfg.format == "json") {
    Json j = report_json(cfg, "census");
    for (const CensusRow& row : rows) {
      j["rows"].push_back({{"q", row.q},
                           {"k", format_poly(row.k)},
                           {"l", format_poly(row.l)},
                           {"n", row.n},
                           {"pi", row.pi_exact.get_str()},
                           {"lambda_sum", row.lambda_sum.get_str()},
                           {"F", row.f_kn.get_str()},
                           {"phi", row.phi_k.get_str()},
                           {"main_term", exact_string(row.main_term)},
                           {"abs_error", exact_string(row.abs_error)},
                           {"poly_bound", row.poly_bound.get_str()},
                           {"exp_bound", exact_string(row.exp_bound)},
                           {"weil_ref", row.weil_ref.exact_string()},
                           {"theorem_bound", exact_string(row.theorem_bound)},
                           {"within_bound", row.within_bound},
                           {"below_weil", row.below_weil}});
      all_within = all_within && row.within_bound;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "q,k,l,n,pi,lambda_sum,F,phi,main_term,abs_error,poly_bound,exp_bound,weil_ref,within_bound\n";
    for (const CensusRow& row : rows) {
      out << row.q << ',' << csv_cell(format_poly(row.k)) << ',' << csv_cell(format_poly(row.l)) << ',' << row.n << ','
          << row.pi_exact.get_str() << ',' << row.lambda_sum.get_str() << ',' << row.f_kn.get_str() << ','
          << row.phi_k.get_str() << ',' << decimal_string(row.main_term) << ',' << decimal_string(row.abs_error) << ','
          << row.poly_bound.get_str() << ',' << decimal_string(row.exp_bound) << ',' << row.weil_ref.decimal_string()
          << ',' << (row.within_bound ? 1 : 0) << '\n';
      all_within = all_within && row.within_bound;
    }
  }
  if (!all_within) {
    err << "error bound exceeded in at least one census row\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  const Field field = FieldCtx::parse(cfg.field_spec);
  const Poly k = parse_poly(field, cfg.k_spec.value_or("1"));
  if (!k.is_monic()) throw InputError("k must be monic");
  const NRange range = cfg.n_range.value_or(NRange{0, 10});
  const CoeffSeries s = hk_series(k, range.hi);
  bool ok = true;
  Json j = report_json(cfg, "series");
  if (cfg.format != "json") out << "n,H,bound,within_bound\n";
  for (unsigned n = range.lo; n <= range.hi; ++n) {
    if (cfg.primes_only && !is_prime_u64(n)) continue;
    std::string bound_text;
    std::optional<bool> within;
    if (n >= 1) {
      const mpz_class bound = hk_bound(s.q(), s.t(), n);
      within = abs(s.at(n)) <= bound;
      ok = ok && *within;
      bound_text = bound.get_str();
    }
    if (cfg.format == "json") {
      j["rows"].push_back({{"n", n},
                           {"H", s.at(n).get_str()},
                           {"bound", within ? Json(bound_text) : Json(nullptr)},
                           {"within_bound", within ? Json(*within) : Json(nullptr)}});
    } else {
      out << n << ',' << s.at(n).get_str() << ',' << bound_text << ',' << (within ? (*within ? "1" : "0") : "") << '\n';
    }
  }
  if (cfg.format == "json") out << j.dump(2) << '\n';
  return ok ? kExitOk : kExitViolation;
}

std::string factor_text(const Factorization& fac) {
  std::vector<std::string> parts;
  if (fac.unit != 1 || fac.factors.empty()) parts.push_back(std::to_string(static_cast<unsigned>(fac.unit)));
  for (const PrimePower& pp : fac.factors) {
    std::string s = format_poly(pp.prime);
    const bool multi_term = std::count_if(pp.prime.coeffs().begin(), pp.prime.coeffs().end(), [](Elem c) { return c != 0; }) > 1;
    if (multi_term && (fac.factors.size() > 1 || pp.multiplicity > 1 || fac.unit != 1)) s = "(" + s + ")";
    if (pp.multiplicity > 1) s += "^" + std::to_string(pp.multiplicity);
    parts.push_back(std::move(s));
  }
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? " * " : "") + parts[i];
  return text;
}

int cmd_factor(const RunConfig& cfg, std::ostream& out) {
  const Field field = FieldCtx::parse(cfg.field_spec);
  const Poly f = parse_poly(field, cfg.poly_arg);
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  const Factorization fac = factorize(f);
  if (cfg.format == "json") {
    Json j = report_json(cfg, "factor");
    j["unit"] = static_cast<unsigned>(fac.unit);
    for (const PrimePower& pp : fac.factors)
      j["rows"].push_back({{"factor", format_poly(pp.prime)}, {"multiplicity", pp.multiplicity}});
    out << j.dump(2) << '\n';
  } else {
    out << factor_text(fac) << '\n';
  }
  return kExitOk;
}

int cmd_irreducibles(const RunConfig& cfg, std::ostream& out) {
  const Field field = FieldCtx::parse(cfg.field_spec);
  if (!cfg.n_range) throw InputError("irreducibles needs --n");
  Json j = report_json(cfg, "irreducibles");
  for (unsigned n : selected_degrees(*cfg.n_range, cfg.primes_only)) {
    if (n == 0) continue;
    monic_count_within(*field, n, cfg.budget);
    const auto list = irreducibles_of_degree(field, n);
    if (cfg.format == "json") {
      Json polys = Json::array();
      for (const Poly& p : *list) polys.push_back(format_poly(p));
      j["rows"].push_back({{"n", n}, {"count", list->size()}, {"polys", polys}});
    } else {
      for (std::size_t i = 0; i < list->size(); ++i) out << (i ? ", " : "") << format_poly((*list)[i]);
      out << '\n';
    }
  }
  if (cfg.format == "json") out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Census of monic irreducible polynomials in arithmetic progressions over F_q[x]"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string n_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field_spec, "field spec: p, p^m, p^m:c0,...,cm, or a prime power q")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "maximum states per exhaustive scan")->capture_default_str();
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write the report to this path instead of stdout");
    sub->add_option("--threads", cfg.threads, "worker threads for scans (0: OpenMP default)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--k", cfg.k_spec, "modulus k (default: a battery of small moduli)");
  verify->add_option("--n", n_text, "degree range lo..hi");
  verify->add_option("--suite", cfg.suite, "suite name or 'all'")->capture_default_str();
  verify->add_flag("--primes-only", cfg.primes_only, "restrict degrees to primes");

  CLI::App* census = app.add_subcommand("census", "emit census rows for (l, n)");
  common(census);
  census->add_option("--k", cfg.k_spec, "modulus k")->required();
  census->add_option("--l", cfg.l_spec, "residue l or 'all-units'")->capture_default_str();
  census->add_option("--n", n_text, "degree range lo..hi")->required();
  census->add_flag("--primes-only", cfg.primes_only, "restrict degrees to primes");

  CLI::App* series = app.add_subcommand("series", "dump H(n,k) with its bound");
  common(series);
  series->add_option("--k", cfg.k_spec, "modulus k (default 1)");
  series->add_option("--n", n_text, "degree range lo..hi (default 0..10)");
  series->add_flag("--primes-only", cfg.primes_only, "restrict degrees to primes");

  CLI::App* factor = app.add_subcommand("factor", "factor a polynomial");
  common(factor);
  factor->add_option("poly", cfg.poly_arg, "polynomial text")->required();

  CLI::App* irreducibles = app.add_subcommand("irreducibles", "list monic irreducibles of degree n");
  common(irreducibles);
  irreducibles->add_option("--n", n_text, "degree or range lo..hi")->required();
  irreducibles->add_flag("--primes-only", cfg.primes_only, "restrict degrees to primes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (!n_text.empty()) cfg.n_range = parse_n_range(n_text);
    if (verify->parsed()) {
      code = cmd_verify(cfg, buffer);
    } else if (census->parsed()) {
      code = cmd_census(cfg, buffer, err);
    } else if (series->parsed()) {
      code = cmd_series(cfg, buffer);
    } else if (factor->parsed()) {
      code = cmd_factor(cfg, buffer);
    } else {
      code = cmd_irreducibles(cfg, buffer);
    }
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << '\n';
    code = kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace ffcensus::cli
