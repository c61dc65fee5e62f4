#include "semihom_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "semihom/contact.hpp"
#include "semihom/error.hpp"
#include "semihom/nash.hpp"
#include "semihom/oracle.hpp"
#include "semihom/resolution.hpp"
#include "semihom/serialize.hpp"
#include "semihom/spectral.hpp"

namespace semihom::cli {

namespace {

struct Options {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::int64_t nmax = 0;
  std::int64_t dmax = 0;
  std::string format = "text";
  std::string out_path;
  std::string f_spec;
  std::string primes = "3,5,7";
  std::string budget = "10000000000000";
};

struct Result {
  int code = kSuccess;
  std::string body;
};

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string pair_label(const CoprimePair& p) {
  return "E(" + std::to_string(p.kappa()) + "," + std::to_string(p.r()) + ")";
}

std::string torsion_field(const FgAbGroup& g) {
  std::string out;
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    out += (i ? ";" : "") + g.torsion()[i].str();
  }
  return out;
}

void render_graded(std::ostream& os, const GradedGroup& g, const std::string& symbol) {
  if (g.is_zero()) {
    os << "  (all groups vanish)\n";
    return;
  }
  for (const auto& [k, grp] : g.entries()) os << "  " << symbol << "^" << k << " = " << grp << "\n";
}

void require_format(const Options& o, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw InvalidArgument(std::string("format '") + o.format + "' is not supported by " + command);
}

Result cmd_resolve(const Options& o) {
  require_format(o, {"text", "json", "csv"}, "resolve");
  ResolutionChain chain = build_minimal_resolution(o.n, o.d, o.m);
  MDivisorList mdiv = m_divisors(chain);
  std::ostringstream os;
  if (o.format == "json") {
    os << to_document(Json{{"chain", chain}, {"m_divisors", mdiv}});
  } else if (o.format == "csv") {
    os << "kappa,r,N,nu,kind,m_index\n";
    for (const auto& v : chain.divisors) {
      auto it = std::find_if(mdiv.entries.begin(), mdiv.entries.end(),
                             [&](const MDivisor& e) { return e.divisor.pair == v.pair; });
      os << v.pair.kappa() << "," << v.pair.r() << "," << v.N << "," << v.nu << ","
         << to_string(v.kind) << "," << (it == mdiv.entries.end() ? "" : std::to_string(it->index))
         << "\n";
    }
  } else {
    os << "minimal m-separating resolution, n=" << o.n << " d=" << o.d << " m=" << o.m << ": "
       << chain.divisors.size() << " divisors\n";
    for (const auto& v : chain.divisors) {
      os << "  " << pair_label(v.pair) << "  N=" << v.N << "  nu=" << v.nu << "  "
         << to_string(v.kind) << "\n";
    }
    os << "m-divisors (N divides m):\n";
    for (const auto& e : mdiv.entries) {
      os << "  i=" << e.index << "  " << pair_label(e.divisor.pair) << "  N=" << e.divisor.N
         << "  nu=" << e.divisor.nu << (e.exceptional ? "" : "  (strict transform)") << "\n";
    }
  }
  return {kSuccess, os.str()};
}

Result cmd_cohomology(const Options& o) {
  require_format(o, {"text", "json", "csv"}, "cohomology");
  validate_contact_params(o.n, o.d, o.m);
  auto pieces = graded_pieces(o.n, o.d, o.m);
  GradedGroup total = contact_cohomology(o.n, o.d, o.m);
  const char* note = pieces.empty() ? "m < d: the contact locus is empty" : nullptr;
  std::ostringstream os;
  if (o.format == "json") {
    Json js = Json::array();
    for (const auto& p : pieces) {
      js.push_back(Json{{"piece", p}, {"cohomology", piece_compact_cohomology(p, o.n, o.d)}});
    }
    Json doc{{"n", o.n},
             {"d", o.d},
             {"m", o.m},
             {"pieces", std::move(js)},
             {"cohomology", total},
             {"motivic_class", contact_class(o.n, o.d, o.m)},
             {"euler_characteristic", integer_to_json(euler_char(total))}};
    if (note) doc["note"] = note;
    os << to_document(doc);
  } else if (o.format == "csv") {
    os << "degree,rank,torsion\n";
    for (const auto& [k, grp] : total.entries()) {
      os << k << "," << grp.rank() << "," << torsion_field(grp) << "\n";
    }
  } else {
    os << "compactly supported cohomology of X_m, n=" << o.n << " d=" << o.d << " m=" << o.m
       << "\n";
    if (note) os << "note: " << note << "\n";
    for (const auto& p : pieces) {
      os << "piece rho=" << p.rho << " base=" << to_string(p.base_kind)
         << " fiber_dim=" << p.fiber_dim << " total_dim=" << p.total_dim << "\n";
      render_graded(os, piece_compact_cohomology(p, o.n, o.d), "H_c");
    }
    os << "total:\n";
    render_graded(os, total, "H_c");
    os << "motivic class: " << contact_class(o.n, o.d, o.m).to_string() << "\n";
    os << "euler characteristic: " << euler_char(total) << "\n";
  }
  return {kSuccess, os.str()};
}

std::string condition_line(const char* name, const ConditionReport& r) {
  if (r.holds) return std::string(name) + " condition: holds\n";
  return std::string(name) + " condition: fails at k = " + join(r.violating_k, ", ") + "\n";
}

Result cmd_floer(const Options& o) {
  require_format(o, {"text", "json"}, "floer");
  FloerResult r = floer_cohomology(o.n, o.d, o.m);
  const std::int64_t offset = arc_floer_shift(o.n, o.m);
  std::ostringstream os;
  if (o.format == "json") {
    os << to_document(Json{{"n", o.n}, {"d", o.d}, {"m", o.m}, {"shift", offset}, {"result", r}});
  } else {
    os << "fixed-point Floer cohomology of the m-th monodromy iterate, n=" << o.n << " d=" << o.d
       << " m=" << o.m << "\n";
    os << condition_line("degeneration", r.degeneration);
    os << condition_line("filtration", r.filtration);
    if (r.groups) {
      os << "HF^k = H_c^{k+" << offset << "}(X_m):\n";
      render_graded(os, *r.groups, "HF");
    } else {
      os << "HF: not determined\n";
    }
  }
  return {kSuccess, os.str()};
}

Result cmd_nash(const Options& o) {
  require_format(o, {"text", "json"}, "nash");
  ValuationReport r = valuation_report(o.n, o.d, o.m);
  std::ostringstream os;
  if (o.format == "json") {
    os << to_document(r);
  } else {
    os << "m-valuations, n=" << o.n << " d=" << o.d << " m=" << o.m << "\n";
    if (!r.note.empty()) os << "note: " << r.note << "\n";
    os << "counts: essential=" << r.essential.size() << " contact=" << r.contact.size()
       << " dlt=" << r.dlt.size() << "\n";
    auto listing = [&](const char* name, const std::vector<Divisor>& v) {
      os << name << ":";
      for (const auto& e : v) os << " " << pair_label(e.pair);
      os << (v.empty() ? " none\n" : "\n");
    };
    listing("essential", r.essential);
    listing("contact", r.contact);
    listing("dlt", r.dlt);
    os << "codimensions:\n";
    for (const auto& [i, c] : r.codims) os << "  i=" << i << "  codim=" << c << "\n";
  }
  return {kSuccess, os.str()};
}

Result cmd_scatter(const Options& o) {
  std::string format = o.format;
  if (format == "text") {
    bool svg_path = o.out_path.size() >= 4 && o.out_path.ends_with(".svg");
    format = svg_path ? "svg" : "csv";
  }
  detail::require(format == "csv" || format == "svg" || format == "json",
                  "scatter supports --format csv, svg or json");
  detail::require(o.nmax >= 3 && o.nmax <= 200, "nmax must lie in [3, 200]");
  detail::require(o.dmax >= 2 && o.dmax <= 200, "dmax must lie in [2, 200]");
  auto rows = scatter_grid(3, o.nmax, 2, o.dmax);
  if (format == "svg") return {kSuccess, scatter_svg(rows)};
  if (format == "json") return {kSuccess, to_document(Json{{"rows", rows}})};
  return {kSuccess, scatter_csv(rows)};
}

std::vector<std::uint64_t> parse_primes(const std::string& list) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    detail::require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos &&
                        item.size() <= 9,
                    "primes must be a comma-separated list of integers");
    std::uint64_t p = std::stoull(item);
    detail::require(is_prime(p), std::to_string(p) + " is not prime");
    out.push_back(p);
  }
  detail::require(!out.empty(), "at least one prime is required");
  return out;
}

Integer parse_budget(const std::string& s) {
  detail::require(!s.empty() && s.size() <= 40 &&
                      s.find_first_not_of("0123456789") == std::string::npos,
                  "budget must be a positive integer");
  Integer b(s);
  detail::require(b > 0, "budget must be a positive integer");
  return b;
}

Result cmd_verify(const Options& o) {
  require_format(o, {"text", "json"}, "verify");
  SparseIntPoly f = parse_polynomial_spec(o.f_spec);
  detail::require(o.m >= 1, "m must be ≥ 1");
  JetCountOptions options;
  options.budget = parse_budget(o.budget);
  auto primes = parse_primes(o.primes);

  bool mismatch = false;
  std::size_t checked = 0;
  Json results = Json::array();
  std::ostringstream text;
  text << "f = " << f.to_string() << " (n=" << f.n() << ", initial degree "
       << (f.is_zero() ? 0 : f.min_degree()) << "), m=" << o.m << "\n";
  for (std::uint64_t p : primes) {
    try {
      JetCountReport r = count_contact_jets(f, o.m, p, options);
      bool ok = stratification_matches(r);
      mismatch = mismatch || !ok;
      ++checked;
      results.push_back(Json{{"p", p}, {"status", ok ? "match" : "mismatch"}, {"report", r}});
      text << "p=" << p << ": " << (ok ? "match" : "MISMATCH") << "  total=" << r.total_count
           << "  base cone=" << r.base_counts.cone << " milnor=" << r.base_counts.milnor << "\n";
      std::map<std::int64_t, bool> orders;
      for (const auto& [rho, c] : r.by_order) orders[rho] = true;
      for (const auto& [rho, c] : r.predicted_by_order) orders[rho] = true;
      for (const auto& [rho, unused] : orders) {
        auto count = r.by_order.count(rho) ? r.by_order.at(rho) : Integer(0);
        auto predicted =
            r.predicted_by_order.count(rho) ? r.predicted_by_order.at(rho) : Integer(0);
        text << "  rho=" << rho << "  count=" << count << "  predicted=" << predicted << "\n";
      }
    } catch (const NonSmoothReduction& e) {
      results.push_back(Json{{"p", p}, {"status", "skipped"}, {"reason", e.what()}});
      text << "p=" << p << ": skipped (" << e.what() << ")\n";
    }
  }
  detail::require(checked > 0, "no prime gives a smooth reduction of the initial form");
  text << (mismatch ? "verdict: MISMATCH\n" : "verdict: all strata match\n");
  int code = mismatch ? kMismatch : kSuccess;
  if (o.format == "json") {
    return {code, to_document(Json{{"f", f}, {"m", o.m}, {"match", !mismatch}, {"results", results}})};
  }
  return {code, text.str()};
}

Result cmd_euler(const Options& o) {
  require_format(o, {"text", "json"}, "euler");
  Integer chi = contact_euler(o.n, o.d, o.m);
  Integer lambda = lefschetz_number(o.n, o.d, o.m);
  bool match = chi == lambda;
  int code = match ? kSuccess : kMismatch;
  if (o.format == "json") {
    return {code, to_document(Json{{"n", o.n},
                                   {"d", o.d},
                                   {"m", o.m},
                                   {"euler_characteristic", integer_to_json(chi)},
                                   {"lefschetz_number", integer_to_json(lambda)},
                                   {"match", match}})};
  }
  std::ostringstream os;
  os << "chi_c(X_m) = " << chi << "\n";
  os << "Lefschetz number = " << lambda << "\n";
  os << (match ? "match\n" : "MISMATCH\n");
  return {code, os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariants of contact loci and Floer cohomology of semihomogeneous singularities",
               "semihom"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}))
        ->capture_default_str();
    sub->add_option("--out", o.out_path, "Write output to this path instead of stdout");
  };
  auto add_ndm = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of variables")->required();
    sub->add_option("--d", o.d, "Degree of the initial form")->required();
    sub->add_option("--m", o.m, "Contact order")->required();
    add_format(sub);
  };

  auto* resolve = app.add_subcommand("resolve", "Minimal m-separating log resolution");
  add_ndm(resolve);
  auto* cohomology = app.add_subcommand("cohomology", "Compactly supported cohomology of X_m");
  add_ndm(cohomology);
  auto* floer = app.add_subcommand("floer", "Floer cohomology of the m-th monodromy iterate");
  add_ndm(floer);
  auto* nash = app.add_subcommand("nash", "Essential, contact and dlt m-valuations");
  add_ndm(nash);
  auto* euler = app.add_subcommand("euler", "Euler characteristic against the Lefschetz number");
  add_ndm(euler);
  auto* scatter = app.add_subcommand("scatter", "Classification of (n, d) pairs as CSV or SVG");
  scatter->add_option("--nmax", o.nmax, "Largest n")->required();
  scatter->add_option("--dmax", o.dmax, "Largest d")->required();
  add_format(scatter);
  auto* verify = app.add_subcommand("verify", "Finite-field point counts of the jet strata");
  verify->add_option("--f", o.f_spec, "Polynomial, inline or as a JSON document")->required();
  verify->add_option("--m", o.m, "Contact order")->required();
  verify->add_option("--primes", o.primes, "Comma-separated primes")->capture_default_str();
  verify->add_option("--budget", o.budget, "Maximum number of candidate jets p^(n m)")
      ->capture_default_str();
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  Result result;
  try {
    if (*resolve) result = cmd_resolve(o);
    if (*cohomology) result = cmd_cohomology(o);
    if (*floer) result = cmd_floer(o);
    if (*nash) result = cmd_nash(o);
    if (*euler) result = cmd_euler(o);
    if (*scatter) result = cmd_scatter(o);
    if (*verify) result = cmd_verify(o);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const NonSmoothReduction& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }

  if (o.out_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    file << result.body;
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return kInvalidInput;
    }
  }
  return result.code;
}

}  // namespace semihom::cli
