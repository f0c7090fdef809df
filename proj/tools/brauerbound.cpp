// brauerbound: certified upper bounds on the transcendental Brauer group of
// a K3 surface with principal CM, from the arithmetic invariants of the CM
// field. All reported bounds are exact rationals or outward-rounded
// enclosures; see README.md for the command reference.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/bounds.hpp"
#include "brauer/cmfield.hpp"
#include "brauer/deltabound.hpp"
#include "brauer/idealsearch.hpp"
#include "brauer/phipsi.hpp"
#include "brauer/report_json.hpp"

namespace {

using nlohmann::json;
using namespace brauer;

int default_precision_bits() {
  if (const char* env = std::getenv("BRAUER_BOUND_PRECISION")) {
    try {
      const int bits = std::stoi(env);
      if (bits >= 8 && bits <= 65536) return bits;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid BRAUER_BOUND_PRECISION=" << env << "\n";
  }
  return kDefaultPrecisionBits;
}

enum class Format { text, json_fmt, csv };

Format parse_format(const std::string& s, bool csv_allowed) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json_fmt;
  if (s == "csv") {
    if (csv_allowed) return Format::csv;
    throw std::invalid_argument("csv format is only available for scan");
  }
  throw std::invalid_argument("unknown format: " + s);
}

std::string enclosure_text(const Enclosure& e, int precision_bits) {
  std::ostringstream os;
  if (e.exact) {
    os << "= " << to_string(e.upper) << " (ceil " << ceil_rational(e.upper).get_str()
       << ", exact)";
  } else {
    os << "<= " << as_double_upper(e.upper) << " (ceil " << ceil_rational(e.upper).get_str()
       << ", enclosure at " << precision_bits << " bits)";
  }
  return os.str();
}

struct FieldSource {
  std::optional<std::int64_t> d;
  std::string invariants_path;

  bool has_d() const { return d.has_value(); }
  CMFieldInvariants resolve(std::optional<IQField>& field_out) const {
    if (has_d()) {
      IQField f = iq_field(*d);
      field_out = f;
      return f.invariants;
    }
    field_out.reset();
    return load_invariants_json(invariants_path);
  }
};

void print_field_line(std::ostream& os, const IQField& f) {
  os << "field: d = " << f.d << " (D = " << f.D << ", h = " << f.h << ")\n";
}

void print_invariants_line(std::ostream& os, const CMFieldInvariants& inv) {
  os << "invariants: deg_E=" << inv.deg_E << " h_E=" << inv.h_E << " h_F=" << inv.h_F
     << " unit_index=" << inv.unit_index << " omega_dEF=" << inv.omega_dEF
     << " omega_dEF2=" << inv.omega_dEF2 << " norm_dEF2=" << inv.norm_dEF2
     << " norm_rad_dEF=" << inv.norm_rad_dEF << "\n";
}

int cmd_bound(const FieldSource& src, int k_degree, const std::vector<std::string>& delta_args,
              Format format, int precision_bits) {
  std::vector<Rational> deltas;
  for (const std::string& s : delta_args) {
    Rational d = parse_rational(s);
    if (sgn(d) <= 0) throw std::invalid_argument("delta must be positive: " + s);
    deltas.push_back(std::move(d));
  }
  std::optional<IQField> field;
  const CMFieldInvariants inv = src.resolve(field);
  const BoundReport report = bound_report(k_degree, inv, deltas, precision_bits);

  if (format == Format::json_fmt) {
    json j = bound_report_to_json(report);
    j["command"] = "bound";
    if (field) j["field"] = json{{"d", field->d}, {"D", field->D}, {"h", field->h}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (field) print_field_line(std::cout, *field);
  print_invariants_line(std::cout, inv);
  std::cout << "M_E^2 = " << to_string(report.me2) << " (M_E <= " << me_upper(inv) << ")\n";
  if (report.phi_inv_n) {
    std::cout << "sharp bound = " << to_string(report.sharp) << " (ceil "
              << report.sharp_ceil.get_str() << ") [n = " << *report.phi_inv_n
              << ", Psi(n) = " << to_string(report.psi_value) << "]\n";
  } else {
    std::cout << "sharp bound = 0 (k*M_E < 1: no conjugation-invariant ideal satisfies the "
                 "totient constraint)\n";
  }
  std::cout << "crude bound " << enclosure_text(report.crude, precision_bits) << "\n";
  for (const DeltaBoundEntry& e : report.delta_bounds) {
    std::cout << "delta bound (delta = " << to_string(e.delta) << ") "
              << enclosure_text(e.value, precision_bits) << " [L_delta = " << e.L
              << ", Psi(L_delta) = " << to_string(e.psi_L) << "]\n";
  }
  return 0;
}

int cmd_search(const FieldSource& src, int k_degree, Format format) {
  if (!src.has_d()) throw std::invalid_argument("search requires imaginary quadratic d");
  const IQField field = iq_field(*src.d);
  const SearchResult result = max_permissible_norm(field, k_degree);
  const Rational sharp = sharp_bound(k_degree, field.invariants);
  Rational budget = Rational(static_cast<long>(k_degree) * k_degree) * me_squared(field.invariants);
  budget.canonicalize();

  if (format == Format::json_fmt) {
    json j = search_result_to_json(result);
    j["command"] = "search";
    j["k_degree"] = k_degree;
    j["field"] = json{{"d", field.d}, {"D", field.D}, {"h", field.h}};
    j["budget_k2_me2"] = to_string(budget);
    j["sharp_bound"] = to_string(sharp);
    j["sharp_bound_ceil"] = ceil_rational(sharp).get_str();
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "search: d = " << field.d << ", k_degree = " << k_degree << "\n"
            << "budget: ratio^2 <= k^2 M_E^2 = " << to_string(budget) << "\n";
  if (!result.feasible) {
    std::cout << "infeasible: k*M_E < 1, no conjugation-invariant ideal satisfies the totient "
                 "constraint\n";
    return 0;
  }
  std::cout << "max norm = " << result.norm.get_str() << "\n";
  std::cout << "witness:";
  if (result.witness.choices.empty()) {
    std::cout << " (unit ideal)";
  }
  for (std::size_t i = 0; i < result.witness.choices.size(); ++i) {
    const PrimeLocalChoice& c = result.witness.choices[i];
    std::cout << (i ? " * " : " ") << c.p << "^" << c.a << " (" << to_string(c.stype)
              << ", ratio " << totient_ratio(c.stype, c.p, c.a).get_str() << ")";
  }
  std::cout << "; total ratio = " << result.witness.ratio.get_str() << "\n";
  std::cout << "sharp bound = " << to_string(sharp) << " (ceil " << ceil_rational(sharp).get_str()
            << ")\n";
  return 0;
}

struct ScanRow {
  IQField field;
  BigInt sharp_ceil;
  BigInt crude_ceil;
  Rational me2;
  std::optional<BigInt> search_norm;
};

int cmd_scan(std::int64_t d_min, std::int64_t d_max, int k_degree, bool with_search,
             Format format, int precision_bits) {
  if (d_min > d_max) throw std::invalid_argument("scan requires d-min <= d-max");
  if (d_max >= 0) throw std::invalid_argument("scan requires d-max < 0");

  std::vector<ScanRow> rows;
  for (std::int64_t d = d_max; d >= d_min; --d) {  // deterministic, descending d
    IQField field;
    try {
      field = iq_field(d);
    } catch (const std::invalid_argument&) {
      continue;  // not squarefree
    }
    ScanRow row;
    row.me2 = me_squared(field.invariants);
    row.sharp_ceil = ceil_rational(sharp_bound(k_degree, field.invariants));
    row.crude_ceil = ceil_rational(crude_bound(k_degree, field.invariants, precision_bits).upper);
    if (with_search) row.search_norm = max_permissible_norm(field, k_degree).norm;
    row.field = std::move(field);
    rows.push_back(std::move(row));
  }

  if (format == Format::csv) {
    std::cout << "d,h,ME_squared,sharp_bound_ceil,crude_bound_ceil,search_norm\n";
    for (const ScanRow& r : rows) {
      std::cout << r.field.d << "," << r.field.h << "," << to_string(r.me2) << ","
                << r.sharp_ceil.get_str() << "," << r.crude_ceil.get_str() << ",";
      if (r.search_norm) std::cout << r.search_norm->get_str();
      std::cout << "\n";
    }
    return 0;
  }

  if (format == Format::json_fmt) {
    json out{{"command", "scan"}, {"k_degree", k_degree}};
    json jrows = json::array();
    for (const ScanRow& r : rows) {
      json jr{{"d", r.field.d},
              {"h", r.field.h},
              {"me_squared", to_string(r.me2)},
              {"sharp_bound_ceil", r.sharp_ceil.get_str()},
              {"crude_bound_ceil", r.crude_ceil.get_str()},
              {"sharp_ceil_over_abs_d",
               as_double_upper(Rational(r.sharp_ceil) / Rational(-r.field.d))}};
      if (r.search_norm) jr["search_norm"] = r.search_norm->get_str();
      jrows.push_back(std::move(jr));
    }
    out["rows"] = std::move(jrows);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  // Text table; the trailing ratio column is descriptive only.
  std::cout << "d\th\tM_E^2\tsharp_ceil\tcrude_ceil\tsearch_norm\tsharp_ceil/|d|\n";
  for (const ScanRow& r : rows) {
    std::cout << r.field.d << "\t" << r.field.h << "\t" << to_string(r.me2) << "\t"
              << r.sharp_ceil.get_str() << "\t" << r.crude_ceil.get_str() << "\t";
    if (r.search_norm) {
      std::cout << r.search_norm->get_str();
    } else {
      std::cout << "-";
    }
    std::cout << "\t" << as_double_upper(Rational(r.sharp_ceil) / Rational(-r.field.d)) << "\n";
  }
  return 0;
}

int cmd_ldelta(const std::string& delta_arg, bool verbose, Format format) {
  const Rational delta = parse_rational(delta_arg);
  const DeltaResult r = l_delta(delta);
  if (format == Format::json_fmt) {
    json j{{"command", "ldelta"},
           {"delta", to_string(r.delta)},
           {"L", r.L},
           {"psi_L", to_string(r.psi_L)},
           {"sieve_limit", r.sieve_limit},
           {"search_steps", r.search_steps}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "L_delta = " << r.L << "\n"
            << "Psi(L_delta) = " << to_string(r.psi_L) << "\n";
  if (verbose) {
    std::cout << "sieve_limit = " << r.sieve_limit << "\n"
              << "search_steps = " << r.search_steps << "\n";
  }
  return 0;
}

int cmd_phi(long n, Format format) {
  const BigInt e = phi_exp(n);
  const double value = phi(n);
  if (format == Format::json_fmt) {
    json j{{"command", "phi"}, {"n", n}, {"phi", value}, {"phi_exp", e.get_str()}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "phi(" << n << ") = " << value << "\n"
            << "phi_exp(" << n << ") = " << e.get_str() << "\n";
  return 0;
}

int cmd_psi(long n, Format format) {
  const Rational v = psi(n);
  if (format == Format::json_fmt) {
    json j{{"command", "psi"}, {"n", n}, {"psi", to_string(v)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "psi(" << n << ") = " << to_string(v) << "\n";
  return 0;
}

int cmd_phiinv(const std::string& q_arg, int deg, double t_raw, bool has_q, bool has_t,
               Format format) {
  if (has_q == has_t) throw std::invalid_argument("phiinv needs exactly one of --Q and --t");
  long n;
  if (has_q) {
    const Rational q = parse_rational(q_arg);
    if (deg > 0) {
      // Phi^-1(2 log Q / deg), the form the sharp bound consumes: the largest
      // n with phi_exp(n)^deg <= Q^2, decided exactly.
      n = phi_inverse_pow(q * q, deg);
    } else {
      n = phi_inverse(PhiInput::log_of_rational(q));
    }
  } else {
    n = phi_inverse(PhiInput::raw_real(t_raw));
  }
  if (format == Format::json_fmt) {
    json j{{"command", "phiinv"}, {"n", n}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "phi_inverse = " << n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified upper bounds on transcendental Brauer groups of CM K3 surfaces"};
  app.require_subcommand(1);

  std::string format_arg = "text";
  int precision_bits = default_precision_bits();
  int k_degree = 1;

  FieldSource src;
  std::int64_t d_arg = 0;

  auto add_common = [&](CLI::App* sub, bool with_precision) {
    sub->add_option("--format", format_arg, "output format")->default_val("text");
    if (with_precision) {
      sub->add_option("--precision-bits", precision_bits,
                      "working precision for enclosed irrational powers");
    }
  };
  auto add_field_source = [&](CLI::App* sub) {
    sub->add_option("--d", d_arg, "squarefree negative d of Q(sqrt(d))");
    sub->add_option("--invariants", src.invariants_path, "path to a CM-field invariants JSON file");
  };

  auto* bound = app.add_subcommand("bound", "evaluate the certified bounds for one field");
  std::vector<std::string> delta_args;
  bound->add_option("--k-degree", k_degree, "degree [k:Q] of the field of definition");
  add_field_source(bound);
  bound->add_option("--delta", delta_args, "additional delta-parameterized bounds (rational)");
  add_common(bound, true);

  auto* search = app.add_subcommand("search", "maximize Nm(I) under the totient constraint");
  search->add_option("--k-degree", k_degree, "degree [k:Q] of the field of definition");
  add_field_source(search);
  add_common(search, false);

  auto* scan = app.add_subcommand("scan", "tabulate bounds over a range of discriminants");
  std::int64_t d_min = 0, d_max = 0;
  bool with_search = false;
  scan->add_option("--d-min", d_min, "most negative d")->required();
  scan->add_option("--d-max", d_max, "least negative d")->required();
  scan->add_option("--k-degree", k_degree, "degree [k:Q] of the field of definition");
  scan->add_flag("--search", with_search, "include the exact ideal-search norm per row");
  add_common(scan, true);

  auto* ldelta_cmd = app.add_subcommand("ldelta", "minimal L with p_(L+2)/(p_(L+2)-1) <= 1+delta");
  std::string delta_arg;
  bool verbose = false;
  ldelta_cmd->add_option("--delta", delta_arg, "positive rational delta")->required();
  ldelta_cmd->add_flag("--verbose", verbose, "print sieve/search counters");
  add_common(ldelta_cmd, false);

  auto* phi_cmd = app.add_subcommand("phi", "log prod_(i<=n)(p_i - 1), with the exact product");
  long n_arg = 0;
  phi_cmd->add_option("--n", n_arg, "index n >= 0")->required();
  add_common(phi_cmd, false);

  auto* psi_cmd = app.add_subcommand("psi", "exact prod_(i<=n+1) p_i/(p_i - 1)");
  psi_cmd->add_option("--n", n_arg, "index n >= -1")->required();
  add_common(psi_cmd, false);

  auto* phiinv_cmd = app.add_subcommand("phiinv", "pseudoinverse of the prime log-sum");
  std::string q_arg;
  int deg_arg = 0;
  double t_arg = 0.0;
  auto* q_opt = phiinv_cmd->add_option("--Q", q_arg, "exact path: rational Q >= 1");
  phiinv_cmd->add_option("--deg", deg_arg, "with --Q: even degree, computes Phi^-1(2 log Q / deg)");
  auto* t_opt = phiinv_cmd->add_option("--t", t_arg, "raw-real path: t >= 0 (may overshoot)");
  add_common(phiinv_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (bound->count("--d") > 0 || search->count("--d") > 0) src.d = d_arg;

  try {
    if (app.got_subcommand(bound)) {
      if (src.has_d() == !src.invariants_path.empty()) {
        throw std::invalid_argument("bound requires exactly one of --d and --invariants");
      }
      return cmd_bound(src, k_degree, delta_args, parse_format(format_arg, false),
                       precision_bits);
    }
    if (app.got_subcommand(search)) {
      if (!src.invariants_path.empty()) {
        throw std::invalid_argument("search requires imaginary quadratic d");
      }
      if (!src.has_d()) throw std::invalid_argument("search requires --d");
      return cmd_search(src, k_degree, parse_format(format_arg, false));
    }
    if (app.got_subcommand(scan)) {
      return cmd_scan(d_min, d_max, k_degree, with_search, parse_format(format_arg, true),
                      precision_bits);
    }
    if (app.got_subcommand(ldelta_cmd)) {
      return cmd_ldelta(delta_arg, verbose, parse_format(format_arg, false));
    }
    if (app.got_subcommand(phi_cmd)) return cmd_phi(n_arg, parse_format(format_arg, false));
    if (app.got_subcommand(psi_cmd)) return cmd_psi(n_arg, parse_format(format_arg, false));
    if (app.got_subcommand(phiinv_cmd)) {
      return cmd_phiinv(q_arg, deg_arg, t_arg, q_opt->count() > 0, t_opt->count() > 0,
                        parse_format(format_arg, false));
    }
    throw std::logic_error("no subcommand dispatched");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
