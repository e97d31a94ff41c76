#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "aho2d/errors.hpp"
#include "aho2d/krylovrr.hpp"
#include "aho2d/momentpt.hpp"
#include "aho2d/spectrumpt.hpp"

namespace aho::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr BigFloat::Precision kDefaultBits = 512;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string a = "0";
  std::string b = "0";
  std::string c = "1";
  std::optional<std::string> lambda;
  int nmax = 4;
  int order = 1;
  std::string state;
  std::optional<std::string> irrep;
  std::string partner = "eo";
  int krylov = 20;
  std::string alpha = "1";
  std::optional<int> precision;
  std::string format = "csv";
  std::string out;
  std::string from = "0";
  std::string to = "1";
  std::string step = "1/20";
  int threads = 0;
};

Rational rational_option(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": '" + text + "' is not a fraction or finite decimal");
  }
}

struct Coefficients {
  Rational a, b, c;
};

Coefficients coefficients(const Options& o) {
  return {rational_option("a", o.a), rational_option("b", o.b), rational_option("c", o.c)};
}

BigFloat::Precision precision(const Options& o) {
  if (o.precision) {
    if (*o.precision < 128) throw UsageError("--precision must be at least 128 bits");
    return static_cast<BigFloat::Precision>(*o.precision);
  }
  if (const char* env = std::getenv("AHO2D_PRECISION_BITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (*end != '\0' || bits < 128) throw UsageError("AHO2D_PRECISION_BITS must be an integer >= 128");
    return static_cast<BigFloat::Precision>(bits);
  }
  return kDefaultBits;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string float_text(const BigFloat& x) { return x.to_string(30); }

Json quadratic_json(const QuadraticNumber& q) {
  return Json{{"exact", q.to_string()},
              {"p", format_rational(q.rational_part())},
              {"q", format_rational(q.surd_coefficient())},
              {"r", q.radicand().get_str()},
              {"float", float_text(q.to_bigfloat(256))}};
}

std::string irrep_column(IrrepLabel irrep, GroupName group, Partner partner) {
  std::string s(to_string(irrep));
  if (irrep == IrrepLabel::E && group == GroupName::C4v) s += partner == Partner::EO ? "_eo" : "_oe";
  return s;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : out_(out) {
    if (!o.out.empty()) {
      file_.open(o.out);
      if (!file_) throw UsageError("cannot open '" + o.out + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

int cmd_classify(const Options& o, std::ostream& os) {
  const auto [a, b, c] = coefficients(o);
  const CaseKind kind = classify_potential(a, b, c);
  const GroupName group = symmetry_group(a, b);
  std::vector<std::string> irreps;
  for (const auto& irrep : group_data(group).irreps) irreps.emplace_back(to_string(irrep.label));
  if (o.format == "json") {
    os << Json{{"case", std::string(to_string(kind))},
               {"separable", kind == CaseKind::Case0},
               {"group", std::string(to_string(group))},
               {"irreps", irreps}}
              .dump(2)
       << "\n";
    return kOk;
  }
  os << to_string(kind) << (kind == CaseKind::Case0 ? " (separable)" : "") << ", group " << to_string(group) << "\n";
  os << "irreps:";
  for (const auto& s : irreps) os << " " << s;
  os << "\n";
  return kOk;
}

std::string polynomial_text(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& v = coeffs[k];
    if (v == 0) continue;
    const Rational mag = abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    const std::string power = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (power.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += format_rational(mag) + "*" + power;
    }
  }
  return out;
}

int cmd_pt1(const Options& o, std::ostream& os) {
  const auto [a, b, c] = coefficients(o);
  if (o.nmax < 0) throw UsageError("--nmax must be non-negative");
  const auto levels = first_order_levels(a, b, c, o.nmax);
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& l : levels) {
      Json row{{"label", l.label}, {"N", l.level}, {"irrep", std::string(to_string(l.irrep))}, {"E0", format_rational(l.e0)}};
      row["E1"] = l.e1 ? quadratic_json(*l.e1) : Json(nullptr);
      row["E1_float"] = float_text(l.e1_approx);
      row["characteristic"] = l.closed_form() ? "" : polynomial_text(l.characteristic);
      rows.push_back(std::move(row));
    }
    os << Json{{"group", std::string(to_string(symmetry_group(a, b)))}, {"levels", rows}}.dump(2) << "\n";
    return kOk;
  }
  os << "label,E0,E1,E1_float,N,irrep,characteristic\n";
  for (const auto& l : levels) {
    os << l.label << "," << format_rational(l.e0) << "," << csv_field(l.e1 ? l.e1->to_string() : "") << ","
       << float_text(l.e1_approx) << "," << l.level << "," << to_string(l.irrep) << ","
       << csv_field(l.closed_form() ? "" : polynomial_text(l.characteristic)) << "\n";
  }
  return kOk;
}

int cmd_mpt(const Options& o, std::ostream& os) {
  const auto [a, b, c] = coefficients(o);
  if (o.state.empty()) throw UsageError("--state is required, e.g. --state 1A1");
  if (o.order < 0) throw UsageError("--order must be non-negative");
  ResolvedState resolved;
  try {
    resolved = resolve_state(o.state, a, b, c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  EnergySeries series;
  if (resolved.multiplicity == 1) {
    series = solve_series(resolved.state, a, b, c, o.order).series;
  } else {
    if (resolved.multiplicity == 2 && o.order > 1) {
      throw ScopeError("coupled pair beyond first order: unsupported (" + o.state + " shares its sector with another state)");
    }
    series.label = o.state;
    series.state = resolved.state;
    series.coefficients.emplace_back(Rational(2 * (resolved.state.level + 1)));
    if (o.order >= 1) {
      const auto roots = coupled_first_order(resolved.state, a, b, c);
      series.coefficients.push_back(roots.at(static_cast<std::size_t>(resolved.index_in_sector)).e1);
    }
  }
  series.label = o.state;
  std::optional<Rational> lambda;
  if (o.lambda) lambda = rational_option("lambda", *o.lambda);

  if (o.format == "json") {
    Json coeffs = Json::array();
    for (std::size_t p = 0; p < series.coefficients.size(); ++p) {
      Json entry = quadratic_json(series.coefficients[p]);
      entry["order"] = p;
      coeffs.push_back(std::move(entry));
    }
    Json doc{{"label", series.label},
             {"N", series.state.level},
             {"irrep", std::string(to_string(series.state.irrep))},
             {"group", std::string(to_string(series.state.group))},
             {"coefficients", coeffs}};
    if (lambda) {
      doc["lambda"] = format_rational(*lambda);
      doc["partial_sum"] = float_text(series.partial_sum(*lambda));
    }
    os << doc.dump(2) << "\n";
    return kOk;
  }
  os << "label,order,coefficient,float\n";
  for (std::size_t p = 0; p < series.coefficients.size(); ++p) {
    os << series.label << "," << p << "," << csv_field(series.coefficients[p].to_string()) << ","
       << float_text(series.coefficients[p].to_bigfloat(256)) << "\n";
  }
  if (lambda) os << series.label << ",sum,lambda=" << format_rational(*lambda) << "," << float_text(series.partial_sum(*lambda)) << "\n";
  return kOk;
}

KrylovConfig krylov_config(const Options& o, const Coefficients& k, const Rational& lambda) {
  KrylovConfig cfg;
  cfg.alpha = rational_option("alpha", o.alpha);
  if (cfg.alpha <= 0) throw UsageError("--alpha must be positive");
  if (o.krylov < 1) throw UsageError("--krylov must be at least 1");
  cfg.K = o.krylov;
  cfg.precision_bits = precision(o);
  cfg.max_precision_bits = std::max<BigFloat::Precision>(4096, cfg.precision_bits);
  cfg.group = symmetry_group(k.a, k.b);
  cfg.params = {k.a, k.b, k.c, lambda};
  return cfg;
}

Partner partner_option(const std::string& text) {
  if (text == "eo") return Partner::EO;
  if (text == "oe") return Partner::OE;
  throw UsageError("--partner must be eo or oe");
}

int cmd_rr(const Options& o, std::ostream& os) {
  const Coefficients k = coefficients(o);
  const Rational lambda = rational_option("lambda", o.lambda.value_or("1"));
  KrylovConfig base = krylov_config(o, k, lambda);
  std::vector<std::pair<IrrepLabel, Partner>> runs;
  if (o.irrep) {
    IrrepLabel irrep;
    try {
      irrep = parse_irrep(*o.irrep);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!group_data(base.group).has_irrep(irrep)) {
      throw UsageError(*o.irrep + " is not an irrep of " + std::string(to_string(base.group)));
    }
    runs.emplace_back(irrep, partner_option(o.partner));
  } else {
    for (const auto& irrep : group_data(base.group).irreps) {
      runs.emplace_back(irrep.label, Partner::EO);
      if (irrep.label == IrrepLabel::E) runs.emplace_back(irrep.label, Partner::OE);
    }
  }
  std::vector<RRResult> results;
  for (const auto& [irrep, partner] : runs) {
    KrylovConfig cfg = base;
    cfg.irrep = irrep;
    cfg.partner = partner;
    results.push_back(rr_eigenvalues(cfg));
  }
  if (o.format == "json") {
    Json docs = Json::array();
    for (const auto& r : results) {
      Json values = Json::array();
      Json conv = Json::array();
      for (const auto& v : r.eigenvalues) values.push_back(float_text(v));
      for (const auto& v : r.convergence) conv.push_back(float_text(v));
      docs.push_back(Json{{"irrep", irrep_column(r.irrep, base.group, r.partner)},
                          {"lambda", format_rational(r.lambda)},
                          {"K_requested", r.K_requested},
                          {"K_used", r.K_used},
                          {"bits", r.bits_used},
                          {"eigenvalues", values},
                          {"convergence", conv}});
    }
    os << docs.dump(2) << "\n";
    return kOk;
  }
  os << "lambda,irrep,index,energy,convergence\n";
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      os << decimal_text(r.lambda) << "," << irrep_column(r.irrep, base.group, r.partner) << "," << i + 1 << ","
         << float_text(r.eigenvalues[i]) << "," << (i < r.convergence.size() ? float_text(r.convergence[i]) : "") << "\n";
    }
  }
  return kOk;
}

struct SweepRow {
  Rational lambda;
  std::string label;
  std::string irrep;
  std::string energy;
  std::string witwit;
};

std::string witwit_for(const std::map<std::string, std::string>& table, const std::string& label, Partner partner, bool is_e) {
  auto it = table.find(label);
  if (it == table.end()) return "";
  const std::string& text = it->second;
  if (!is_e) return text;
  const auto split = text.find("),(");
  if (split == std::string::npos) return text;
  return partner == Partner::EO ? text.substr(0, split + 1) : text.substr(split + 2);
}

int cmd_sweep(const Options& o, std::ostream& os) {
  const Coefficients k = coefficients(o);
  const Rational from = rational_option("from", o.from);
  const Rational to = rational_option("to", o.to);
  const Rational step = rational_option("step", o.step);
  if (step <= 0) throw UsageError("--step must be positive");
  if (from > to) throw UsageError("--from must not exceed --to");
  if (o.nmax < 0) throw UsageError("--nmax must be non-negative");
  const KrylovConfig base = krylov_config(o, k, from);
  require_bounded({k.a, k.b, k.c, from});
  const GroupName group = base.group;

  // Tracked states: every first-order level up to nmax; the j-th label of an
  // irrep follows the j-th Ritz value of that irrep.
  const auto levels = first_order_levels(k.a, k.b, k.c, o.nmax);
  std::map<std::string, std::string> witwit;
  if (group == GroupName::C4v) {
    for (const auto& e : label_map(o.nmax)) witwit[e.label] = e.literature;
  }
  std::map<IrrepLabel, std::size_t> needed;
  for (const auto& l : levels) ++needed[l.irrep];

  std::vector<Rational> grid;
  for (Rational x = from; x <= to; x += step) grid.push_back(x);

  struct Task {
    std::size_t point;
    IrrepLabel irrep;
    Partner partner;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0) continue;
    for (const auto& [irrep, count] : needed) {
      tasks.push_back({i, irrep, Partner::EO});
      if (irrep == IrrepLabel::E) tasks.push_back({i, irrep, Partner::OE});
    }
  }
  std::vector<std::optional<RRResult>> results(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        KrylovConfig cfg = base;
        cfg.params.lambda = grid[tasks[t].point];
        cfg.irrep = tasks[t].irrep;
        cfg.partner = tasks[t].partner;
        results[t] = rr_eigenvalues(cfg);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t n_threads = std::min<std::size_t>(o.threads > 0 ? static_cast<std::size_t>(o.threads) : hw, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (!failures[t]) continue;
    try {
      std::rethrow_exception(failures[t]);
    } catch (const ScopeError& e) {
      throw ScopeError("sweep at lambda=" + format_rational(grid[tasks[t].point]) + ": " + e.what());
    } catch (const NumericalError& e) {
      throw NumericalError("sweep at lambda=" + format_rational(grid[tasks[t].point]) + ": " + e.what());
    }
  }
  std::map<std::tuple<std::size_t, IrrepLabel, Partner>, const RRResult*> lookup;
  for (std::size_t t = 0; t < tasks.size(); ++t) lookup[{tasks[t].point, tasks[t].irrep, tasks[t].partner}] = &*results[t];

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::map<IrrepLabel, std::size_t> seen;
    for (const auto& l : levels) {
      const std::size_t index = seen[l.irrep]++;
      std::vector<Partner> partners{Partner::EO};
      if (l.irrep == IrrepLabel::E) partners.push_back(Partner::OE);
      for (Partner partner : partners) {
        std::string energy;
        if (grid[i] == 0) {
          energy = float_text(BigFloat(l.e0, base.precision_bits));
        } else {
          const RRResult& r = *lookup.at({i, l.irrep, partner});
          if (index >= r.eigenvalues.size()) {
            throw NumericalError("only " + std::to_string(r.eigenvalues.size()) + " Ritz values for " + std::string(to_string(l.irrep)) +
                                 " at lambda=" + format_rational(grid[i]) + "; raise --krylov");
          }
          energy = float_text(r.eigenvalues[index]);
        }
        rows.push_back({grid[i], l.label, irrep_column(l.irrep, group, partner), energy,
                        witwit_for(witwit, l.label, partner, l.irrep == IrrepLabel::E)});
      }
    }
  }

  if (o.format == "json") {
    Json doc = Json::array();
    for (const auto& r : rows) {
      doc.push_back(Json{{"lambda", decimal_text(r.lambda)}, {"label", r.label}, {"irrep", r.irrep}, {"energy", r.energy}, {"witwit_label", r.witwit}});
    }
    os << doc.dump(2) << "\n";
    return kOk;
  }
  os << "lambda,label,irrep,energy,witwit_label\n";
  for (const auto& r : rows) {
    os << decimal_text(r.lambda) << "," << r.label << "," << r.irrep << "," << r.energy << "," << csv_field(r.witwit) << "\n";
  }
  return kOk;
}

void add_coefficient_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--a", o.a, "x^4 coefficient (fraction or decimal)")->capture_default_str();
  cmd->add_option("--b", o.b, "y^4 coefficient")->capture_default_str();
  cmd->add_option("--c", o.c, "x^2 y^2 coupling (enters as 2c)")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
}

void add_krylov_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--krylov", o.krylov, "Krylov subspace dimension K")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Gaussian exponent of the reference functions")->capture_default_str();
  cmd->add_option("--precision", o.precision, "starting working precision in bits (default 512, or AHO2D_PRECISION_BITS)");
}

}  // namespace

std::string decimal_text(const Rational& value) {
  Integer den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return format_rational(value);
  const int digits = std::max(twos, fives);
  if (digits == 0) return value.get_num().get_str();
  Integer scaled = value.get_num();
  Integer ten_pow = 1;
  for (int i = 0; i < digits; ++i) ten_pow *= 10;
  scaled = scaled * ten_pow / value.get_den();
  const bool negative = scaled < 0;
  std::string s = (negative ? Integer(-scaled) : scaled).get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (negative ? "-" : "") + s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-dimensional anharmonic oscillator: symmetry, perturbation theory and Rayleigh-Ritz levels", "aho2d"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "report the potential case, point group and irreps");
  add_coefficient_flags(classify, o);
  add_output_flags(classify, o);

  auto* pt1 = app.add_subcommand("pt1", "first-order energies of all levels up to --nmax");
  add_coefficient_flags(pt1, o);
  pt1->add_option("--nmax", o.nmax, "highest unperturbed level N")->capture_default_str();
  add_output_flags(pt1, o);

  auto* mpt = app.add_subcommand("mpt", "moment-method perturbation series of one state");
  add_coefficient_flags(mpt, o);
  mpt->add_option("--state", o.state, "state label jS, e.g. 2E")->required();
  mpt->add_option("--order", o.order, "highest perturbation order")->capture_default_str();
  mpt->add_option("--lambda", o.lambda, "also print the partial sum at this coupling");
  add_output_flags(mpt, o);

  auto* rr = app.add_subcommand("rr", "Rayleigh-Ritz eigenvalues in the Krylov space of each irrep");
  add_coefficient_flags(rr, o);
  rr->add_option("--lambda", o.lambda, "coupling (default 1)");
  rr->add_option("--irrep", o.irrep, "restrict to one irrep");
  rr->add_option("--partner", o.partner, "E row: eo (reference y) or oe (reference x)")->capture_default_str();
  add_krylov_flags(rr, o);
  add_output_flags(rr, o);

  auto* sweep = app.add_subcommand("sweep", "track every level up to --nmax over a lambda grid");
  add_coefficient_flags(sweep, o);
  sweep->add_option("--nmax", o.nmax, "highest unperturbed level tracked")->capture_default_str();
  sweep->add_option("--from", o.from, "first lambda")->capture_default_str();
  sweep->add_option("--to", o.to, "last lambda")->capture_default_str();
  sweep->add_option("--step", o.step, "lambda step")->capture_default_str();
  sweep->add_option("--threads", o.threads, "worker threads (0: hardware concurrency)")->capture_default_str();
  add_krylov_flags(sweep, o);
  add_output_flags(sweep, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "aho2d: " << e.what() << "\n";
    return kUsage;
  }

  try {
    auto dispatch = [&](std::ostream& os) {
      if (classify->parsed()) return cmd_classify(o, os);
      if (pt1->parsed()) return cmd_pt1(o, os);
      if (mpt->parsed()) return cmd_mpt(o, os);
      if (rr->parsed()) return cmd_rr(o, os);
      return cmd_sweep(o, os);
    };
    std::ostringstream buffer;
    const int code = dispatch(buffer);
    Emitter emitter(o, out);
    emitter.stream() << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "aho2d: " << e.what() << "\n";
    return kUsage;
  } catch (const ScopeError& e) {
    err << "aho2d: " << e.what() << "\n";
    return kScopeRefusal;
  } catch (const NumericalError& e) {
    err << "aho2d: numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "aho2d: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "aho2d: numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace aho::cli
