#include "torsionlab/jobs.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "torsionlab/checks.hpp"
#include "torsionlab/parallel.hpp"
#include "torsionlab/surgery.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kSchema = "1";

std::string fmt17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

// one result cell; complex values expand to {re, im} / twin CSV columns
struct Value {
  enum class Kind { Int, Num, Cplx, Str, Bool } kind;
  long long i = 0;
  double d = 0.0;
  Complex c{0.0, 0.0};
  std::string s;
  bool b = false;

  static Value of_int(long long v) { Value x{Kind::Int}; x.i = v; return x; }
  static Value of_num(double v) { Value x{Kind::Num}; x.d = v; return x; }
  static Value of_cplx(Complex v) { Value x{Kind::Cplx}; x.c = v; return x; }
  static Value of_str(std::string v) { Value x{Kind::Str}; x.s = std::move(v); return x; }
  static Value of_bool(bool v) { Value x{Kind::Bool}; x.b = v; return x; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

std::string value_json(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Int: return std::to_string(v.i);
    case Value::Kind::Num: return fmt17(v.d);
    case Value::Kind::Cplx:
      return "{\"re\":" + fmt17(v.c.real()) + ",\"im\":" + fmt17(v.c.imag()) + "}";
    case Value::Kind::Str: return "\"" + json_escape(v.s) + "\"";
    case Value::Kind::Bool: return v.b ? "true" : "false";
  }
  return "null";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

std::string value_text(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Int: return std::to_string(v.i);
    case Value::Kind::Num: return fmt17(v.d);
    case Value::Kind::Cplx: {
      const std::string re = fmt17(v.c.real());
      const std::string im = fmt17(v.c.imag());
      return re + (im[0] == '-' ? "" : "+") + im + "i";
    }
    case Value::Kind::Str: return v.s;
    case Value::Kind::Bool: return v.b ? "true" : "false";
  }
  return "";
}

struct ConfigField {
  std::string key;
  Value value;
  bool present = true;
};

std::vector<ConfigField> config_fields(const JobConfig& c) {
  std::vector<ConfigField> f;
  f.push_back({"n", Value::of_int(c.n)});
  f.push_back({"s", c.s ? Value::of_cplx(*c.s) : Value{}, c.s.has_value()});
  f.push_back({"p", c.p ? Value::of_int(*c.p) : Value{}, c.p.has_value()});
  f.push_back({"q", c.q ? Value::of_int(*c.q) : Value{}, c.q.has_value()});
  f.push_back({"tol", Value::of_num(c.tol)});
  f.push_back({"seed", Value::of_int(static_cast<long long>(c.seed))});
  f.push_back({"output", Value::of_str(c.output)});
  f.push_back({"with_oracle", Value::of_bool(c.with_oracle)});
  f.push_back({"relator", Value::of_str(c.relator), !c.relator.empty()});
  f.push_back({"sweep", Value::of_str(c.sweep), !c.sweep.empty()});
  f.push_back({"max_iter", Value::of_int(c.max_iter)});
  f.push_back({"starts", Value::of_int(c.starts)});
  f.push_back({"trials", Value::of_int(c.trials)});
  f.push_back({"n_max", Value::of_int(c.n_max)});
  return f;
}

std::string render_json(const JobConfig& c, const Table& t,
                        const std::vector<std::string>& warnings) {
  std::string out = "{\"command\":\"" + json_escape(c.command) + "\",\"config\":{";
  bool first = true;
  for (const ConfigField& f : config_fields(c)) {
    if (!first) out += ",";
    first = false;
    out += "\"" + f.key + "\":" + (f.present ? value_json(f.value) : std::string("null"));
  }
  out += "},\"results\":[";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += ",";
    out += "{";
    for (size_t k = 0; k < t.columns.size(); ++k) {
      if (k) out += ",";
      out += "\"" + t.columns[k] + "\":" + value_json(t.rows[r][k]);
    }
    out += "}";
  }
  out += "],\"warnings\":[";
  for (size_t i = 0; i < warnings.size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(warnings[i]) + "\"";
  }
  out += "],\"versions\":{\"torsionlab\":\"" + std::string(kVersion) + "\",\"schema\":\"" +
         kSchema + "\"}}";
  out += "\n";
  return out;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (size_t k = 0; k < t.columns.size(); ++k) {
    const bool is_cplx = !t.rows.empty() && t.rows.front()[k].kind == Value::Kind::Cplx;
    if (k) out += ",";
    if (is_cplx) {
      out += t.columns[k] + "_re," + t.columns[k] + "_im";
    } else {
      out += t.columns[k];
    }
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out += ",";
      if (row[k].kind == Value::Kind::Cplx) {
        out += fmt17(row[k].c.real()) + "," + fmt17(row[k].c.imag());
      } else {
        out += csv_quote(value_text(row[k]));
      }
    }
    out += "\n";
  }
  return out;
}

std::string render_text(const JobConfig& c, const Table& t,
                        const std::vector<std::string>& warnings) {
  std::string out = "# torsionlab " + c.command + "\n";
  out += "# config:";
  for (const ConfigField& f : config_fields(c)) {
    if (!f.present) continue;
    out += " " + f.key + "=" + value_text(f.value);
  }
  out += "\n";
  for (size_t k = 0; k < t.columns.size(); ++k) {
    out += (k ? "\t" : "") + t.columns[k];
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out += "\t";
      out += value_text(row[k]);
    }
    out += "\n";
  }
  for (const std::string& w : warnings) out += "warning: " + w + "\n";
  return out;
}

std::string render(const JobConfig& c, const Table& t, const std::vector<std::string>& warnings) {
  if (c.output == "json") return render_json(c, t, warnings);
  if (c.output == "csv") return render_csv(t);
  return render_text(c, t, warnings);
}

RootOptions root_options(const JobConfig& c) {
  RootOptions o;
  if (c.max_iter > 0) o.max_iter = c.max_iter;
  return o;
}

WordMacros build_macros(const JobConfig& c, std::string* error) {
  WordMacros macros{{"w", twist_knot_word()}};
  for (const std::string& def : c.defines) {
    const auto eq = def.find('=');
    if (eq == std::string::npos || eq == 0) {
      *error = "bad --define '" + def + "', expected name=word";
      return macros;
    }
    const std::string name = def.substr(0, eq);
    try {
      macros[name] = parse_word(def.substr(eq + 1), macros);
    } catch (const ParseError& e) {
      *error = "bad --define '" + def + "': " + e.what();
      return macros;
    }
  }
  return macros;
}

int run_riley_roots(const JobConfig& c, Table& t, std::vector<std::string>& warnings) {
  // the u-degree and leading coefficient are discovered numerically, so
  // they ride along in the report
  t.columns = {"index", "u", "residual", "x", "z", "phi_degree", "phi_leading"};
  RileyRootsResult rr;
  PolyC phi;
  try {
    phi = riley_poly_in_u(c.n, *c.s);
    rr = riley_roots(c.n, *c.s, root_options(c));
  } catch (const std::exception& e) {
    warnings.push_back(e.what());
    return kExitNumericFailure;
  }
  warnings.insert(warnings.end(), rr.warnings.begin(), rr.warnings.end());
  warnings.insert(warnings.end(), rr.notices.begin(), rr.notices.end());
  for (size_t i = 0; i < rr.points.size(); ++i) {
    const RileyPoint& pt = rr.points[i];
    t.rows.push_back({Value::of_int(static_cast<long long>(i)), Value::of_cplx(pt.u),
                      Value::of_num(std::abs(riley_eval(c.n, pt.s, pt.u))),
                      Value::of_cplx(pt.x()), Value::of_cplx(pt.z()),
                      Value::of_int(phi.degree()), Value::of_cplx(phi.leading())});
  }
  if (rr.points.empty()) {
    warnings.push_back("no roots found");
    return kExitNumericFailure;
  }
  return rr.warnings.empty() ? kExitOk : kExitNumericFailure;
}

int run_torsion(const JobConfig& c, Table& t, std::vector<std::string>& warnings) {
  t.columns = {"index", "u", "residual", "x", "tau"};
  if (c.with_oracle) {
    t.columns.push_back("tau_fox");
    t.columns.push_back("diff");
  }

  std::string macro_error;
  const WordMacros macros = build_macros(c, &macro_error);
  if (!macro_error.empty()) {
    warnings.push_back(macro_error);
    return kExitUsage;
  }
  Word relator;
  try {
    relator = c.relator.empty() ? twist_knot_relator(c.n) : parse_word(c.relator, macros);
  } catch (const ParseError& e) {
    warnings.push_back(std::string("bad --relator: ") + e.what());
    return kExitUsage;
  }

  RileyRootsResult rr;
  try {
    rr = riley_roots(c.n, *c.s, root_options(c));
  } catch (const std::exception& e) {
    warnings.push_back(e.what());
    return kExitNumericFailure;
  }
  warnings.insert(warnings.end(), rr.warnings.begin(), rr.warnings.end());
  warnings.insert(warnings.end(), rr.notices.begin(), rr.notices.end());
  int code = rr.warnings.empty() ? kExitOk : kExitNumericFailure;

  for (size_t i = 0; i < rr.points.size(); ++i) {
    const RileyPoint& pt = rr.points[i];
    std::vector<Value> row{Value::of_int(static_cast<long long>(i)), Value::of_cplx(pt.u),
                           Value::of_num(std::abs(riley_eval(c.n, pt.s, pt.u))),
                           Value::of_cplx(pt.x())};
    TorsionReport closed;
    try {
      closed = make_torsion_report(c.n, pt, TorsionMethod::closed_form, c.tol);
    } catch (const std::exception& e) {
      warnings.push_back("root " + std::to_string(i) + ": " + e.what());
      code = kExitNumericFailure;
      continue;
    }
    row.push_back(Value::of_cplx(closed.value));
    if (c.with_oracle) {
      Complex tau_fox;
      try {
        if (c.relator.empty()) {
          tau_fox = make_torsion_report(c.n, pt, TorsionMethod::fox_oracle, c.tol).value;
        } else {
          const SL2Assignment rho{rho_a(pt.s), rho_b(pt.s, pt.u)};
          tau_fox = johnson_torsion(relator, rho, Gen::B);
        }
      } catch (const std::exception& e) {
        warnings.push_back("root " + std::to_string(i) + ": " + e.what());
        code = kExitNumericFailure;
        continue;
      }
      const double diff = std::abs(closed.value - tau_fox);
      row.push_back(Value::of_cplx(tau_fox));
      row.push_back(Value::of_num(diff));
      if (!(diff <= c.tol * (1.0 + std::abs(closed.value)))) {
        warnings.push_back("root " + std::to_string(i) +
                           ": closed form and Fox oracle disagree (diff " + fmt17(diff) + ")");
        code = kExitNumericFailure;
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (rr.points.empty()) {
    warnings.push_back("no roots found");
    code = kExitNumericFailure;
  }
  return code;
}

int run_surgery(const JobConfig& c, Table& t, std::vector<std::string>& warnings) {
  t.columns = {"index",     "s",     "u",           "extension_residual",
               "tr_lambda", "tau_m", "tau_m_quotient", "diff"};
  const Slope slope(*c.p, *c.q);
  SolveOptions opts;
  opts.starts = c.starts;
  opts.tol = c.tol;
  if (c.max_iter > 0) opts.max_iter = c.max_iter;
  opts.seed = c.seed;

  const std::vector<SurgeryRep> reps = solve_surgery_reps(c.n, slope, opts);
  if (reps.empty()) {
    warnings.push_back("no representation found");
    return kExitNoRepresentation;
  }
  int code = kExitOk;
  for (size_t i = 0; i < reps.size(); ++i) {
    const SurgeryRep& rep = reps[i];
    std::vector<Value> row{Value::of_int(static_cast<long long>(i)),
                           Value::of_cplx(rep.point.s), Value::of_cplx(rep.point.u),
                           Value::of_num(rep.extension_residual)};
    try {
      const Complex tr_l = trace_longitude(rep.point);
      const Complex tau_direct = torsion_surgery(c.n, rep.point);
      const Complex tau_quot = torsion_surgery_from_complement(c.n, rep.point);
      const double diff = std::abs(tau_direct - tau_quot);
      row.push_back(Value::of_cplx(tr_l));
      row.push_back(Value::of_cplx(tau_direct));
      row.push_back(Value::of_cplx(tau_quot));
      row.push_back(Value::of_num(diff));
      if (!(diff <= c.tol * (1.0 + std::abs(tau_direct)))) {
        warnings.push_back("representation " + std::to_string(i) +
                           ": surgery torsion routes disagree (diff " + fmt17(diff) + ")");
        code = kExitNumericFailure;
      }
      t.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      warnings.push_back("representation " + std::to_string(i) + ": " + e.what());
      code = kExitNumericFailure;
    }
  }
  return code;
}

int run_verify(const JobConfig& c, Table& t, std::vector<std::string>& warnings) {
  t.columns = {"check", "trials", "max_err", "pass"};
  CheckOptions opts;
  opts.seed = c.seed;
  opts.trials = c.trials;
  opts.n_max = c.n_max;
  bool all_pass = true;
  for (const CheckResult& res : run_all_checks(opts)) {
    t.rows.push_back({Value::of_str(res.name), Value::of_int(res.trials),
                      Value::of_num(res.max_err), Value::of_bool(res.pass)});
    if (!res.pass) {
      all_pass = false;
      warnings.push_back(res.name + " failed: " + res.detail);
    }
  }
  return all_pass ? kExitOk : kExitNumericFailure;
}

int run_table(const JobConfig& c, Table& t, std::vector<std::string>& warnings) {
  t.columns = {"row", "x", "root_index", "u", "tau_complement", "tr_lambda", "tau_surgery"};
  double x_from = 0.0, x_to = 0.0;
  int count = 0;
  {
    char extra = 0;
    if (std::sscanf(c.sweep.c_str(), "%lf:%lf:%d%c", &x_from, &x_to, &count, &extra) != 3 ||
        count < 1) {
      warnings.push_back("bad --sweep-x '" + c.sweep + "', expected start:end:count");
      return kExitUsage;
    }
  }

  struct SlotRow {
    Complex x, u, tau_e, tr_l, tau_m;
    int root_index;
  };
  struct Slot {
    std::vector<SlotRow> rows;
    std::vector<std::string> warnings;
  };
  std::vector<Slot> slots(count);

  parallel_for(static_cast<size_t>(count), [&](size_t i) {
    Slot& slot = slots[i];
    const double x = (count == 1) ? x_from
                                  : x_from + (x_to - x_from) * double(i) / double(count - 1);
    const Complex xc(x, 0.0);
    const Complex s = (xc + std::sqrt(xc * xc - 4.0)) / 2.0;
    RileyRootsResult rr;
    try {
      rr = riley_roots(c.n, s, root_options(c));
    } catch (const std::exception& e) {
      slot.warnings.push_back("x=" + fmt17(x) + ": " + e.what());
      return;
    }
    for (const std::string& w : rr.warnings) slot.warnings.push_back("x=" + fmt17(x) + ": " + w);
    for (size_t k = 0; k < rr.points.size(); ++k) {
      const RileyPoint& pt = rr.points[k];
      try {
        slot.rows.push_back(SlotRow{pt.x(), pt.u, torsion_complement(c.n, pt, c.tol),
                                    trace_longitude(pt), torsion_surgery(c.n, pt),
                                    static_cast<int>(k)});
      } catch (const std::exception& e) {
        slot.warnings.push_back("x=" + fmt17(x) + " root " + std::to_string(k) + ": " + e.what());
      }
    }
  });

  int code = kExitOk;
  for (int i = 0; i < count; ++i) {
    for (const SlotRow& row : slots[i].rows) {
      t.rows.push_back({Value::of_int(i), Value::of_cplx(row.x), Value::of_int(row.root_index),
                        Value::of_cplx(row.u), Value::of_cplx(row.tau_e),
                        Value::of_cplx(row.tr_l), Value::of_cplx(row.tau_m)});
    }
    if (!slots[i].warnings.empty()) {
      warnings.insert(warnings.end(), slots[i].warnings.begin(), slots[i].warnings.end());
      code = kExitNumericFailure;
    }
  }
  return code;
}

}  // namespace

Complex parse_complex_arg(const std::string& text) {
  const auto comma = text.find(',');
  size_t used = 0;
  const double re = std::stod(text.substr(0, comma), &used);
  if (used != (comma == std::string::npos ? text.size() : comma)) {
    throw std::invalid_argument("bad complex literal '" + text + "', expected re,im");
  }
  double im = 0.0;
  if (comma != std::string::npos) {
    const std::string rest = text.substr(comma + 1);
    im = std::stod(rest, &used);
    if (used != rest.size()) {
      throw std::invalid_argument("bad complex literal '" + text + "', expected re,im");
    }
  }
  return {re, im};
}

JobResult run_job(const JobConfig& config) {
  Table table;
  std::vector<std::string> warnings;

  const auto usage = [&](const std::string& msg) {
    return JobResult{kExitUsage, "error: " + msg + "\n"};
  };

  if (config.output != "json" && config.output != "csv" && config.output != "text") {
    return usage("unknown output mode '" + config.output + "'");
  }
  if (!(config.tol > 0.0)) return usage("tol must be positive");
  if (config.s && *config.s == Complex(0.0)) return usage("s must be nonzero");

  const bool needs_n = config.command != "verify";
  if (needs_n && config.n == 0) return usage("n must be nonzero");

  int code = kExitOk;
  try {
    if (config.command == "riley-roots") {
      if (!config.s) return usage("riley-roots requires --s");
      code = run_riley_roots(config, table, warnings);
    } else if (config.command == "torsion") {
      if (!config.s) return usage("torsion requires --s");
      code = run_torsion(config, table, warnings);
    } else if (config.command == "surgery") {
      if (!config.p || !config.q) return usage("surgery requires --p and --q");
      try {
        Slope probe(*config.p, *config.q);
        (void)probe;
      } catch (const std::invalid_argument& e) {
        return usage(e.what());
      }
      code = run_surgery(config, table, warnings);
    } else if (config.command == "verify") {
      code = run_verify(config, table, warnings);
    } else if (config.command == "table") {
      if (config.sweep.empty()) return usage("table requires --sweep-x");
      code = run_table(config, table, warnings);
      if (code == kExitUsage) return usage(warnings.empty() ? "bad sweep" : warnings.back());
    } else {
      return usage("unknown command '" + config.command + "'");
    }
  } catch (const std::exception& e) {
    warnings.push_back(e.what());
    code = kExitNumericFailure;
  }
  if (code == kExitUsage) {
    return usage(warnings.empty() ? "invalid configuration" : warnings.back());
  }

  return JobResult{code, render(config, table, warnings)};
}

}  // namespace torsionlab
