#include "sogamma/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "sogamma/charvar.hpp"
#include "sogamma/gamma.hpp"
#include "sogamma/socx.hpp"
#include "sogamma/socx_json.hpp"

namespace sogamma::cli {

namespace {

using nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool quiet = false;
  bool force = false;
  bool json = false;
  bool verbose = false;
  bool oracle = false;
  bool no_witness = false;
  int n = 0;
  std::optional<int> i;
  std::string range;
  std::string path;
  std::string path_b;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

SOComplex load(const std::string& path) { return parse_complex(read_file(path)); }

/// Rank r of Y_n satisfies 2r + 1 = 5^n; used to size-guard loaded complexes.
std::size_t rank_of_yn(int n) {
  std::size_t p = 1;
  for (int k = 0; k < n; ++k) p *= 5;
  return (p - 1) / 2;
}

std::string format_alpha(const SOComplex& s, const QVector& v) {
  std::string text;
  for (std::size_t e = 0; e < v.coords.size(); ++e) {
    const auto& c = v.coords[e];
    if (c.is_zero()) continue;
    if (!text.empty()) text += " + ";
    const auto& el = v.slice->elements[e];
    text += "(" + c.str() + ")";
    if (el.power != 0) text += "x^" + std::to_string(el.power);
    text += " " + (*s.module)[el.gen].id;
  }
  return text.empty() ? "0" : text;
}

void print_table(std::ostream& out, const GammaTable& t, const SOComplex& s, bool with_witness) {
  out << "complex " << t.complex_name << "\n";
  out << std::setw(6) << "i" << "  Gamma\n";
  for (const auto& r : t.rows) {
    out << std::setw(6) << r.i << "  " << r.value.str() << "\n";
    if (!with_witness || !r.witness) continue;
    out << "        alpha = " << format_alpha(s, r.witness->alpha) << "\n";
    for (const auto& [j, p] : r.witness->a_coeffs) out << "        a_" << j << " = " << p.str() << "\n";
  }
}

int cmd_build_yn(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw UsageError("build-yn: n must be at least 1");
  if (o.n > kGammaMaxN && !o.force)
    throw UsageError("build-yn: n = " + std::to_string(o.n) + " exceeds the size guard " + std::to_string(kGammaMaxN) +
                     " (use --force)");
  const auto text = dump_complex(build_yn(o.n));
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
    if (!o.quiet) err << "wrote Y_" << o.n << " (rank " << rank_of_yn(o.n) << ") to " << o.out_path << "\n";
  }
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto s = load(o.path);
  const auto report = validate(s);
  if (o.json) {
    ordered_json doc;
    doc["complex"] = s.name;
    doc["ok"] = report.ok;
    auto vs = ordered_json::array();
    for (const auto& v : report.violations) vs.push_back({{"axiom", v.axiom}, {"where", v.where}, {"detail", v.detail}});
    doc["violations"] = std::move(vs);
    out << doc.dump(2) << "\n";
  } else {
    out << s.name << " (rank " << s.rank() << "): " << report.str();
  }
  return report.ok ? kOk : kMathFailure;
}

int cmd_tensor(const Options& o, std::ostream& out, std::ostream& err) {
  const auto a = load(o.path);
  const auto b = load(o.path_b);
  for (const auto* s : {&a, &b}) {
    const auto report = validate(*s);
    if (!report.ok) {
      err << "tensor: input '" << s->name << "' is invalid: " << report.str();
      return kMathFailure;
    }
  }
  const auto product = tensor(a, b);
  const auto ra = a.rank();
  const auto rb = b.rank();
  const auto r = product.rank();
  const bool identity = 2 * r + 1 == (2 * ra + 1) * (2 * rb + 1);
  std::ostringstream line;
  line << "rank identity: 2*" << r << "+1 = " << 2 * r + 1 << ", (2*" << ra << "+1)(2*" << rb
       << "+1) = " << (2 * ra + 1) * (2 * rb + 1) << (identity ? " ok" : " MISMATCH") << "\n";
  if (o.out_path.empty()) {
    out << dump_complex(product);
    err << line.str();
  } else {
    write_file(o.out_path, dump_complex(product));
    out << line.str();
  }
  return identity ? kOk : kMathFailure;
}

int cmd_gamma(const Options& o, std::ostream& out, std::ostream& err) {
  int imin = 0;
  int imax = 0;
  if (o.i) {
    imin = imax = *o.i;
  } else {
    const auto r = parse_range(o.range);
    if (!r) throw UsageError("gamma: bad range '" + o.range + "', expected A..B with A <= B");
    std::tie(imin, imax) = *r;
  }
  const auto s = load(o.path);
  if (s.rank() > rank_of_yn(kGammaMaxN) && !o.force)
    throw UsageError("gamma: rank " + std::to_string(s.rank()) + " exceeds the size guard (use --force)");
  const auto report = validate(s);
  if (!report.ok) {
    err << "gamma: complex '" << s.name << "' is invalid: " << report.str();
    return kMathFailure;
  }
  const auto table = gamma_table(s, imin, imax);

  int status = kOk;
  std::vector<std::string> problems;
  for (const auto& r : table.rows) {
    if (r.witness) {
      const auto why = check_witness(s, r);
      if (!why.empty()) problems.push_back("i=" + std::to_string(r.i) + ": witness rejected: " + why);
    }
    if (!o.oracle) continue;
    try {
      const auto check = gamma_oracle(s, r.i);
      if (!(check.value == r.value))
        problems.push_back("i=" + std::to_string(r.i) + ": solver " + r.value.str() + ", oracle " + check.value.str());
    } catch (const std::length_error& e) {
      problems.push_back("i=" + std::to_string(r.i) + ": oracle not run: " + e.what());
    }
  }
  if (!problems.empty()) status = kMathFailure;

  if (o.json) {
    auto doc = to_json(table, s, !o.no_witness);
    if (o.oracle) doc["oracle_agrees"] = problems.empty();
    out << doc.dump(2) << "\n";
  } else {
    print_table(out, table, s, o.verbose && !o.no_witness);
    if (o.oracle && problems.empty()) out << "oracle agrees on " << table.rows.size() << " row(s)\n";
  }
  for (const auto& p : problems) err << "gamma: " << p << "\n";
  return status;
}

ordered_json lifted_json(const charvar::LiftedComponent& c) {
  return {{"sigma", c.signature.str()}, {"l", c.l}, {"cs_lift", c.cs_lift.str()}, {"gr_lift", c.gr_lift}};
}

bool is_beta_power(const charvar::LiftedComponent& c, int n) {
  return c.l == 0 && c.signature.betas() == n && static_cast<int>(c.signature.sigma.size()) == n;
}

int cmd_charvar(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("charvar: n must be at least 1");
  if (o.n > kCensusMaxN && !o.force)
    throw UsageError("charvar: n = " + std::to_string(o.n) + " exceeds the size guard " +
                     std::to_string(kCensusMaxN) + " (use --force)");
  const auto census = charvar::enumerate_components(o.n, o.verbose);
  const auto search = charvar::find_extension_components(o.n);
  bool census_ok = true;
  for (int i = 0; i <= o.n; ++i)
    census_ok = census_ok && census.by_irreducible[static_cast<std::size_t>(i)] == charvar::expected_count(o.n, i);
  const bool unique = search.found.size() == 1 && is_beta_power(search.found.front(), o.n);

  if (o.json) {
    auto doc = charvar::to_json(census, o.verbose);
    ordered_json ext;
    auto found = ordered_json::array();
    for (const auto& c : search.found) found.push_back(lifted_json(c));
    ext["found"] = std::move(found);
    if (o.verbose) {
      auto cands = ordered_json::array();
      for (const auto& c : search.examined)
        cands.push_back({{"j", c.j},
                         {"k", c.k},
                         {"integral_lift", c.integral_lift},
                         {"l", c.integral_lift ? ordered_json(c.l) : ordered_json()},
                         {"grading_ok", c.grading_ok}});
      ext["candidates"] = std::move(cands);
    }
    doc["extension"] = std::move(ext);
    out << doc.dump(2) << "\n";
  } else {
    out << "n = " << o.n << ", total components " << census.total << "\n";
    out << std::setw(4) << "i" << std::setw(14) << "count" << std::setw(14) << "2^i C(n,i)" << "\n";
    for (int i = 0; i <= o.n; ++i)
      out << std::setw(4) << i << std::setw(14) << census.by_irreducible[static_cast<std::size_t>(i)] << std::setw(14)
          << charvar::expected_count(o.n, i) << "\n";
    if (o.verbose) {
      for (const auto& sig : census.components) {
        const auto d = charvar::component_data(sig);
        out << "  " << sig.str() << " cs " << d.cs_mod1.str() << " gr " << d.gr_mod8 << " dim_chi " << d.dim_chi
            << " dim_R " << d.dim_R << "\n";
      }
      out << "extension candidates (j, k):\n";
      for (const auto& c : search.examined) {
        out << "  (" << c.j << ", " << c.k << ") ";
        if (!c.integral_lift)
          out << "no integral lift\n";
        else
          out << "l = " << c.l << (c.grading_ok ? " grading ok\n" : " grading fails\n");
      }
    }
    out << "extension components:";
    for (const auto& c : search.found) out << " " << c.signature.str() << " l=" << c.l;
    out << "\n";
  }
  return census_ok && unique ? kOk : kMathFailure;
}

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

int cmd_certify(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("certify: n must be at least 1");
  if (o.n > kCensusMaxN && !o.force)
    throw UsageError("certify: n = " + std::to_string(o.n) + " exceeds the size guard " +
                     std::to_string(kCensusMaxN) + " (use --force)");
  const int n = o.n;
  const Rational target = rat(49L * n, 120);
  std::vector<Check> checks;

  std::optional<GammaValue> gamma_value;
  if (n <= kGammaMaxN || o.force) {
    const auto yn = build_yn(n);
    const auto r = gamma(yn, 2 * n);
    gamma_value = r.value;
    const bool match = !r.value.is_infinite() && r.value.value() == target;
    checks.push_back({"gamma", match, "Gamma_Y" + std::to_string(n) + "(" + std::to_string(2 * n) + ") = " +
                                          r.value.str() + ", expected " + target.str()});
    const auto why = check_witness(yn, r);
    checks.push_back({"gamma-witness", why.empty(), why.empty() ? "witness re-evaluates" : why});
  } else {
    checks.push_back({"gamma", true, "skipped (n > " + std::to_string(kGammaMaxN) + ")"});
  }

  const auto census = charvar::enumerate_components(n);
  bool census_ok = census.by_irreducible.size() == static_cast<std::size_t>(n) + 1;
  std::ostringstream counts;
  for (int i = 0; census_ok && i <= n; ++i) {
    const auto got = census.by_irreducible[static_cast<std::size_t>(i)];
    census_ok = got == charvar::expected_count(n, i);
    counts << (i ? " " : "") << got;
  }
  checks.push_back({"census", census_ok, "counts by i: " + counts.str() + ", total " + std::to_string(census.total)});

  const auto search = charvar::find_extension_components(n);
  const bool unique = search.found.size() == 1 && is_beta_power(search.found.front(), n);
  std::string found_text;
  for (const auto& c : search.found) found_text += (found_text.empty() ? "" : " ") + c.signature.str() + " l=" + std::to_string(c.l);
  checks.push_back({"extension", unique,
                    std::to_string(search.examined.size()) + " classes examined, found " +
                        (found_text.empty() ? "none" : found_text)});

  charvar::ComponentSignature beta_n;
  beta_n.sigma.assign(static_cast<std::size_t>(n), charvar::Rep::beta);
  const auto lifted = charvar::lift(beta_n, 0);
  bool cs_ok = lifted.cs_lift == target;
  std::string cs_detail = "cs_lift(beta^" + std::to_string(n) + ") = " + lifted.cs_lift.str();
  if (gamma_value) {
    cs_ok = cs_ok && !gamma_value->is_infinite() && gamma_value->value() == lifted.cs_lift;
    cs_detail += ", Gamma = " + gamma_value->str();
  }
  checks.push_back({"cs-lift", cs_ok, cs_detail});

  const auto data = charvar::component_data(beta_n);
  checks.push_back({"dim-R", data.dim_R == 3 * n, "dim R(beta^" + std::to_string(n) + ") = " + std::to_string(data.dim_R)});

  for (int b1 = 0; b1 <= 2; ++b1) {
    const auto h = charvar::handle_bounds(n, b1);
    const bool ok = h.min_1handles == n + b1 && h.min_2handles == n && h.min_23handles == n + b1;
    std::ostringstream d;
    d << "b1 = " << b1 << ": 1-handles >= " << h.min_1handles << ", 2-handles >= " << h.min_2handles
      << ", 2- or 3-handles >= " << h.min_23handles << " (3n = " << 3 * n << " <= 3 * #1-handles)";
    checks.push_back({"handles", ok, d.str()});
  }

  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (o.json) {
    ordered_json doc;
    doc["n"] = n;
    doc["pass"] = all;
    auto arr = ordered_json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["checks"] = std::move(arr);
    out << doc.dump(2) << "\n";
  } else {
    out << "certify n = " << n << "\n";
    for (const auto& c : checks) out << (c.pass ? "  PASS " : "  FAIL ") << std::left << std::setw(14) << c.name << std::right << c.detail << "\n";
    out << (all ? "all checks passed" : "certification FAILED") << "\n";
  }
  return all ? kOk : kMathFailure;
}

}  // namespace

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  try {
    const int a = std::stoi(m[1].str());
    const int b = std::stoi(m[2].str());
    if (a > b) return std::nullopt;
    return std::pair{a, b};
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact SO-complex and Gamma invariant toolkit", "sogamma"};
  app.require_subcommand(1, 1);
  app.add_flag("-q,--quiet", o.quiet, "Suppress the version banner");
  app.add_flag("--force", o.force, "Override size guards");
  app.set_version_flag("--version", kVersion);

  auto* build = app.add_subcommand("build-yn", "Write the complex of the n-fold connected sum");
  build->add_option("n", o.n, "Number of summands")->required();
  build->add_option("-o,--output", o.out_path, "Output path (stdout if omitted)");

  auto* val = app.add_subcommand("validate", "Check the SO-complex axioms");
  val->add_option("path", o.path, "socx-v1 file")->required();
  val->add_flag("--json", o.json, "Machine-readable report");

  auto* ten = app.add_subcommand("tensor", "Connected-sum tensor product A (x) B");
  ten->add_option("a", o.path, "Left factor (needs d = 0, D2 = 0)")->required();
  ten->add_option("b", o.path_b, "Right factor")->required();
  ten->add_option("-o,--output", o.out_path, "Output path (stdout if omitted)");

  auto* gam = app.add_subcommand("gamma", "Gamma table");
  gam->add_option("path", o.path, "socx-v1 file")->required();
  auto* opt_i = gam->add_option("--i", o.i, "Single index");
  auto* opt_range = gam->add_option("--range", o.range, "Index range A..B (write --range=-1..3 for negative A)");
  opt_i->excludes(opt_range);
  gam->add_flag("--json", o.json, "JSON table");
  gam->add_flag("--oracle", o.oracle, "Cross-check every row with the threshold-scan oracle");
  gam->add_flag("--no-witness", o.no_witness, "Omit witnesses");
  gam->add_flag("-v,--verbose", o.verbose, "Print witnesses");

  auto* cv = app.add_subcommand("charvar", "Character-variety census and extension search");
  cv->add_option("n", o.n, "Number of summands")->required();
  cv->add_flag("--json", o.json, "JSON census");
  cv->add_flag("-v,--verbose", o.verbose, "List components and every extension candidate");

  auto* cert = app.add_subcommand("certify", "End-to-end certification report");
  cert->add_option("n", o.n, "Number of summands")->required();
  cert->add_flag("--json", o.json, "JSON report");

  for (auto* sub : {build, val, ten, gam, cv, cert}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "sogamma " << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  if (gam->parsed() && !o.i && o.range.empty()) {
    err << "usage error: gamma needs --i N or --range A..B\n";
    return kUsage;
  }
  if (!o.quiet) err << "sogamma " << kVersion << "\n";

  try {
    if (build->parsed()) return cmd_build_yn(o, out, err);
    if (val->parsed()) return cmd_validate(o, out);
    if (ten->parsed()) return cmd_tensor(o, out, err);
    if (gam->parsed()) return cmd_gamma(o, out, err);
    if (cv->parsed()) return cmd_charvar(o, out);
    return cmd_certify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const UnsupportedTensor& e) {
    err << "unsupported tensor: " << e.what() << "\n";
    return kMathFailure;
  } catch (const InvalidComplex& e) {
    err << "invalid complex: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace sogamma::cli
