// Command-line front end: compute symbolic or evaluated tables of the
// degenerate number families, run the identity verification catalog, and
// emit the two dynamic-programming triangles. All data output goes to
// stdout and is byte-deterministic; timing diagnostics go to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degen/identities.hpp"
#include "degen/lambda_poly.hpp"
#include "degen/numbers.hpp"
#include "degen/rational.hpp"

namespace {

using degen::Family;
using degen::FamilyParams;
using degen::IdentityId;
using degen::IdentityReport;
using degen::LambdaPoly;
using degen::ParamGrid;
using degen::ParamPoint;
using degen::Profile;
using degen::Range;
using degen::Rational;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Range parse_range(const std::string& text, const char* name) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(text);
      return Range{v, v};
    }
    const long lo = std::stol(text.substr(0, dots));
    const long hi = std::stol(text.substr(dots + 2));
    if (hi < lo) throw UsageError(std::string("empty range for --") + name + ": " + text);
    return Range{lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed range for --") + name + " (want \"a..b\" or \"a\"): " + text);
  }
}

Range nonneg_range(const std::string& text, const char* name) {
  const Range r = parse_range(text, name);
  if (r.lo < 0) throw UsageError(std::string("--") + name + " must be nonnegative");
  return r;
}

Profile resolve_profile(const std::string& flag_value) {
  if (!flag_value.empty()) {
    if (auto p = degen::profile_from_string(flag_value)) return *p;
    throw UsageError("unknown profile: " + flag_value);
  }
  if (const char* env = std::getenv("DEGEN_PROFILE")) {
    if (auto p = degen::profile_from_string(env)) return *p;
    throw UsageError(std::string("invalid DEGEN_PROFILE value: ") + env);
  }
  return Profile::Smoke;
}

// ---------------------------------------------------------------- compute

struct ComputeRecord {
  FamilyParams params;
  std::string value;
};

int run_compute(const std::string& family_name, const std::string& n_text,
                const std::string& r_text, const std::string& k_text,
                const std::string& lambda_text, const std::string& format) {
  const auto family = degen::family_from_string(family_name);
  if (!family) throw UsageError("unknown family: " + family_name);

  const bool wants_r = *family == Family::DegHyperharmonic || *family == Family::DegDaeheeOrder;
  const bool wants_k = *family == Family::DegStirling1;
  if (!wants_r && !r_text.empty()) {
    throw UsageError("--r is not a parameter of " + family_name);
  }
  if (!wants_k && !k_text.empty()) {
    throw UsageError("--k is not a parameter of " + family_name);
  }
  if (wants_r && r_text.empty()) throw UsageError(family_name + " requires --r");
  if (wants_k && k_text.empty()) throw UsageError(family_name + " requires --k");
  if (n_text.empty()) throw UsageError("compute requires --n");

  const Range n_range = nonneg_range(n_text, "n");
  std::optional<Range> extra;
  if (wants_r) extra = nonneg_range(r_text, "r");
  if (wants_k) extra = nonneg_range(k_text, "k");
  if (*family == Family::DegDaeheeOrder && extra->lo < 1) {
    throw UsageError("deg-daehee-order requires r >= 1");
  }

  std::optional<Rational> lambda0;
  if (lambda_text != "sym") {
    try {
      lambda0 = degen::parse_rational(lambda_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--lambda must be \"sym\" or an exact rational: ") + e.what());
    }
  }

  std::vector<ComputeRecord> records;
  for (long n = n_range.lo; n <= n_range.hi; ++n) {
    const Range inner = extra.value_or(Range{0, 0});
    for (long x = inner.lo; x <= inner.hi; ++x) {
      FamilyParams params;
      params.n = static_cast<unsigned>(n);
      if (wants_r) params.r = static_cast<unsigned>(x);
      if (wants_k) {
        if (x > n) {
          throw UsageError("deg-stirling1 requires 0 <= k <= n (got n=" + std::to_string(n) +
                           ", k=" + std::to_string(x) + ")");
        }
        params.k = static_cast<unsigned>(x);
      }
      const LambdaPoly value = degen::family_value(*family, params);
      records.push_back(
          {params, lambda0 ? degen::to_string(value.eval(*lambda0)) : degen::to_string(value)});
    }
  }

  if (format == "json") {
    json out;
    out["command"] = "compute";
    out["family"] = family_name;
    out["lambda"] = lambda0 ? degen::to_string(*lambda0) : "sym";
    out["records"] = json::array();
    for (const auto& rec : records) {
      json params;
      params["n"] = rec.params.n;
      if (rec.params.r) params["r"] = *rec.params.r;
      if (rec.params.k) params["k"] = *rec.params.k;
      out["records"].push_back({{"params", std::move(params)}, {"value", rec.value}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "family,n,r,k,lambda,value\n";
    const std::string lambda_col = lambda0 ? degen::to_string(*lambda0) : "sym";
    for (const auto& rec : records) {
      std::cout << family_name << ',' << rec.params.n << ','
                << (rec.params.r ? std::to_string(*rec.params.r) : "") << ','
                << (rec.params.k ? std::to_string(*rec.params.k) : "") << ',' << lambda_col << ','
                << rec.value << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- verify

json range_json(const Range& r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

json grid_json(const ParamGrid& grid) {
  json out = json::object();
  if (grid.n) out["n"] = range_json(*grid.n);
  if (grid.r) out["r"] = range_json(*grid.r);
  if (grid.s) out["s"] = range_json(*grid.s);
  if (grid.k) out["k"] = range_json(*grid.k);
  if (grid.N) out["N"] = range_json(*grid.N);
  if (grid.order > 0) out["order"] = grid.order;
  return out;
}

json point_json(const ParamPoint& p) {
  json out = json::object();
  if (!p.family.empty()) out["family"] = p.family;
  if (p.n) out["n"] = *p.n;
  if (p.r) out["r"] = *p.r;
  if (p.s) out["s"] = *p.s;
  if (p.k) out["k"] = *p.k;
  if (p.N) out["N"] = *p.N;
  return out;
}

void emit_reports_json(const std::vector<IdentityReport>& reports) {
  json out;
  out["command"] = "verify";
  out["reports"] = json::array();
  bool all_passed = true;
  for (const auto& report : reports) {
    all_passed = all_passed && report.ok();
    json r;
    r["id"] = std::string(degen::to_string(report.id));
    r["grid"] = grid_json(report.grid);
    r["points_checked"] = report.points_checked;
    r["failures"] = json::array();
    for (const auto& failure : report.failures) {
      r["failures"].push_back({{"point", point_json(failure.point)},
                               {"lhs", degen::to_string(failure.lhs)},
                               {"rhs", degen::to_string(failure.rhs)}});
    }
    out["reports"].push_back(std::move(r));
  }
  out["all_passed"] = all_passed;
  std::cout << out.dump(2) << "\n";
}

void emit_reports_csv(const std::vector<IdentityReport>& reports) {
  std::cout << "id,points_checked,failure_count,first_failure_point,first_failure_lhs,first_failure_rhs\n";
  for (const auto& report : reports) {
    std::cout << degen::to_string(report.id) << ',' << report.points_checked << ','
              << report.failures.size() << ',';
    if (!report.failures.empty()) {
      const auto& f = report.failures.front();
      std::cout << degen::to_string(f.point) << ',' << degen::to_string(f.lhs) << ','
                << degen::to_string(f.rhs);
    } else {
      std::cout << ",,";
    }
    std::cout << "\n";
  }
}

int run_verify(const std::string& id_text, bool all, const std::string& profile_text,
               const std::string& n_text, const std::string& r_text, const std::string& s_text,
               const std::string& k_text, const std::string& N_text, long order,
               const std::string& format, bool flip_thm2) {
  const Profile profile = resolve_profile(profile_text);
  degen::VerifyOptions options;
  options.flip_thm2_sign = flip_thm2;

  std::vector<IdentityReport> reports;
  if (all) {
    reports = degen::run_all(profile, options);
  } else {
    const auto id = degen::identity_from_string(id_text);
    if (!id) throw UsageError("unknown identity id: " + id_text);
    ParamGrid grid = degen::default_grid(*id, profile);
    if (!n_text.empty()) grid.n = parse_range(n_text, "n");
    if (!r_text.empty()) grid.r = parse_range(r_text, "r");
    if (!s_text.empty()) grid.s = parse_range(s_text, "s");
    if (!k_text.empty()) grid.k = parse_range(k_text, "k");
    if (!N_text.empty()) grid.N = parse_range(N_text, "N");
    if (order > 0) grid.order = static_cast<std::size_t>(order);
    reports.push_back(degen::verify(*id, grid, options));
  }

  for (const auto& report : reports) {
    std::cerr << degen::to_string(report.id) << ": " << report.points_checked << " points, "
              << report.failures.size() << " failures, " << report.elapsed.count() / 1000.0
              << " ms\n";
  }

  if (format == "json") {
    emit_reports_json(reports);
  } else {
    emit_reports_csv(reports);
  }
  for (const auto& report : reports) {
    if (!report.ok()) return 1;
  }
  return 0;
}

// ------------------------------------------------------------------ table

int run_table(const std::string& kind, long n_max, long order_max, const std::string& format) {
  if (n_max < 0) throw UsageError("--n-max must be nonnegative");
  if (kind == "hyperharmonic") {
    if (order_max < 0) throw UsageError("table hyperharmonic requires --order-max >= 0");
    const degen::HyperharmonicTable table(n_max, order_max);
    if (format == "json") {
      json rows = json::array();
      for (long n = 0; n <= n_max; ++n) {
        json row = json::array();
        for (long r = 0; r <= order_max; ++r) row.push_back(degen::to_string(table.at(n, r)));
        rows.push_back(std::move(row));
      }
      json out;
      out["command"] = "table";
      out["kind"] = kind;
      out["n_max"] = n_max;
      out["order_max"] = order_max;
      out["rows"] = std::move(rows);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "n,r,value\n";
      for (long n = 0; n <= n_max; ++n) {
        for (long r = 0; r <= order_max; ++r) {
          std::cout << n << ',' << r << ',' << degen::to_string(table.at(n, r)) << "\n";
        }
      }
    }
    return 0;
  }
  if (kind == "stirling1") {
    if (order_max >= 0) throw UsageError("--order-max is not a parameter of table stirling1");
    const degen::StirlingTable table(n_max);
    if (format == "json") {
      json rows = json::array();
      for (long n = 0; n <= n_max; ++n) {
        json row = json::array();
        for (long k = 0; k <= n; ++k) row.push_back(degen::to_string(table.at(n, k)));
        rows.push_back(std::move(row));
      }
      json out;
      out["command"] = "table";
      out["kind"] = kind;
      out["n_max"] = n_max;
      out["rows"] = std::move(rows);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "n,k,value\n";
      for (long n = 0; n <= n_max; ++n) {
        for (long k = 0; k <= n; ++k) {
          std::cout << n << ',' << k << ',' << degen::to_string(table.at(n, k)) << "\n";
        }
      }
    }
    return 0;
  }
  throw UsageError("unknown table kind: " + kind + " (want hyperharmonic or stirling1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation and verification of degenerate special-number identities"};
  app.require_subcommand(1);

  std::string family, n_text, r_text, s_text, k_text, N_text, lambda_text = "sym";
  std::string format = "json", id_text, profile_text, kind;
  long order = 0, n_max = -1, order_max = -1;
  bool all = false, flip_thm2 = false;

  auto* compute = app.add_subcommand("compute", "compute family values over a parameter range");
  compute->add_option("--family", family, "family name (deg-harmonic, deg-hyperharmonic, deg-daehee, deg-daehee-order, deg-stirling1, deg-derangement)")->required();
  compute->add_option("--n", n_text, "range for n, \"a..b\" or \"a\"")->required();
  compute->add_option("--r", r_text, "range for r (hyperharmonic and Daehee order)");
  compute->add_option("--k", k_text, "range for k (Stirling column)");
  compute->add_option("--lambda", lambda_text, "\"sym\" for symbolic output or an exact rational evaluation point");
  compute->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "verify identities over exact parameter grids");
  verify->add_option("--id", id_text, "identity id (see README for the catalog)");
  verify->add_flag("--all", all, "verify the whole catalog");
  verify->add_option("--n", n_text, "range override for n");
  verify->add_option("--r", r_text, "range override for r");
  verify->add_option("--s", s_text, "range override for s");
  verify->add_option("--k", k_text, "range override for k");
  verify->add_option("--N", N_text, "range override for N");
  verify->add_option("--order", order, "series truncation order override");
  verify->add_option("--profile", profile_text, "grid profile: smoke or full (default smoke; DEGEN_PROFILE overrides)");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--inject-thm2-sign-flip", flip_thm2,
                   "self-test hook: flip one sign in the THM2 right-hand side");

  auto* table = app.add_subcommand("table", "emit a full dynamic-programming table");
  table->add_option("--kind", kind, "hyperharmonic or stirling1")->required();
  table->add_option("--n-max", n_max, "largest row index")->required();
  table->add_option("--order-max", order_max, "largest order column (hyperharmonic only)");
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      return run_compute(family, n_text, r_text, k_text, lambda_text, format);
    }
    if (verify->parsed()) {
      if (all != id_text.empty()) {
        throw UsageError("verify requires exactly one of --id or --all");
      }
      return run_verify(id_text, all, profile_text, n_text, r_text, s_text, k_text, N_text, order,
                        format, flip_thm2);
    }
    return run_table(kind, n_max, order_max, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const degen::GridError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
