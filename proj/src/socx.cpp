#include "sogamma/socx.hpp"

#include <sstream>

namespace sogamma {

namespace {

constexpr std::size_t kMaxReportedPerCheck = 8;
const std::string kUnderlineMark = "̲";

LambdaMap zero_d(const ModulePtr& m) { return LambdaMap(m, m, kDegreeD); }
LambdaMap zero_u(const ModulePtr& m) { return LambdaMap(m, m, kDegreeU); }
LambdaMap zero_d1(const ModulePtr& m) { return LambdaMap(m, BigradedModule::lambda_line(), kDegreeD1); }
LambdaMap zero_d2(const ModulePtr& m) { return LambdaMap(BigradedModule::lambda_line(), m, kDegreeD2); }

void check_strict_decrease(const LambdaMap& f, const std::string& name, ValidationReport& report) {
  std::size_t reported = 0;
  const auto& src = *f.source();
  const auto& tgt = *f.target();
  for (std::size_t g = 0; g < src.rank(); ++g) {
    for (const auto& [h, poly] : f.column(g)) {
      for (const auto& [p, c] : poly.terms()) {
        const Rational lhs = tgt[h].iota + Rational(p);
        if (lhs < src[g].iota) continue;
        if (reported++ < kMaxReportedPerCheck) {
          std::ostringstream os;
          os << "term " << LaurentPoly::monomial(c, p) << " has I-level " << lhs << " >= " << src[g].iota;
          report.violations.push_back({"I-decrease:" + name, src[g].id + " -> " + tgt[h].id, os.str()});
        }
      }
    }
  }
}

void check_identity(const LambdaMap& residual, const std::string& axiom, ValidationReport& report) {
  std::size_t reported = 0;
  const auto& src = *residual.source();
  const auto& tgt = *residual.target();
  for (std::size_t g = 0; g < src.rank() && reported < kMaxReportedPerCheck; ++g) {
    for (const auto& [h, poly] : residual.column(g)) {
      if (reported++ >= kMaxReportedPerCheck) break;
      report.violations.push_back(
          {axiom, src[g].id + " -> " + tgt[h].id, "composite entry is " + poly.str() + ", expected 0"});
    }
  }
}

std::string theta_power(std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += kTensorSep;
    out += kTheta;
  }
  return out;
}

std::size_t arity(const BigradedModule& m) {
  if (m.rank() == 0) return 1;
  return split_tuple(m[0].id).size();
}

int parity_sign(int gr) { return floor_mod(gr, 2) == 0 ? 1 : -1; }

}  // namespace

std::string underline(const std::string& id) { return id + kUnderlineMark; }

std::vector<std::string> split_tuple(const std::string& id) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = id.find(kTensorSep, start);
    if (pos == std::string::npos) {
      parts.push_back(id.substr(start));
      return parts;
    }
    parts.push_back(id.substr(start, pos - start));
    start = pos + kTensorSep.size();
  }
}

std::vector<SpecialGenerator> special_generators(const SOComplex& s) {
  std::vector<SpecialGenerator> out;
  const std::string ua = underline(kAlpha);
  const std::string ub = underline(kBeta);
  for (std::size_t g = 0; g < s.rank(); ++g) {
    SpecialGenerator sg{g, 0, 0};
    int plain = 0;
    bool other = false;
    for (const auto& f : split_tuple((*s.module)[g].id)) {
      if (f == kAlpha || f == kBeta) ++plain;
      if (f == kAlpha || f == ua)
        ++sg.a;
      else if (f == kBeta || f == ub)
        ++sg.b;
      else if (f != kTheta)
        other = true;
    }
    if (plain == 1 && !other) out.push_back(sg);
  }
  return out;
}

SOComplex make_complex(std::string name, ModulePtr module) {
  SOComplex s;
  s.name = std::move(name);
  s.d = zero_d(module);
  s.u = zero_u(module);
  s.d1 = zero_d1(module);
  s.d2 = zero_d2(module);
  s.module = std::move(module);
  return s;
}

std::string ValidationReport::str() const {
  if (ok) return "ok\n";
  std::ostringstream os;
  os << violations.size() << " violation(s)\n";
  for (const auto& v : violations) os << "  [" << v.axiom << "] " << v.where << ": " << v.detail << "\n";
  return os.str();
}

ValidationReport validate(const SOComplex& s) {
  ValidationReport report;
  for (const auto& id : s.module->duplicate_ids())
    report.violations.push_back({"unique-ids", id, "generator id occurs more than once"});

  const std::pair<const LambdaMap*, std::string> maps[] = {{&s.d, "d"}, {&s.u, "U"}, {&s.d1, "D1"}, {&s.d2, "D2"}};
  const int expected_degree[] = {kDegreeD, kDegreeU, kDegreeD1, kDegreeD2};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& [f, name] = maps[i];
    if (f->degree() != expected_degree[i]) {
      report.violations.push_back({"homogeneity:" + name, name,
                                   "declared degree " + std::to_string(f->degree()) + ", expected " +
                                       std::to_string(expected_degree[i])});
    }
    std::size_t reported = 0;
    for (auto& line : f->homogeneity_violations())
      if (reported++ < kMaxReportedPerCheck) report.violations.push_back({"homogeneity:" + name, name, line});
  }
  for (const auto& [f, name] : maps) check_strict_decrease(*f, name, report);

  check_identity(compose(s.d, s.d), "d^2=0", report);
  check_identity(compose(s.d1, s.d), "D1d=0", report);
  check_identity(compose(s.d, s.d2), "dD2=0", report);
  check_identity(compose(s.d, s.u) - compose(s.u, s.d) - compose(s.d2, s.d1), "dU-Ud=D2D1", report);

  report.ok = report.violations.empty();
  return report;
}

TildeComplex assemble_tilde(const SOComplex& s) {
  const auto report = validate(s);
  if (!report.ok) throw InvalidComplex("assemble_tilde: " + report.str());
  const std::size_t r = s.rank();
  std::vector<Generator> gens = s.module->generators();
  for (std::size_t g = 0; g < r; ++g) {
    const auto& src = (*s.module)[g];
    gens.push_back({"χ·" + src.id, src.gr + 3, src.iota});
  }
  gens.push_back({"1", 0, Rational(0)});
  auto module = std::make_shared<const BigradedModule>(std::move(gens));
  const std::size_t unit = 2 * r;

  TildeComplex t{module, LambdaMap(module, module, -1), LambdaMap(module, module, 3)};
  for (std::size_t g = 0; g < r; ++g) {
    for (const auto& [h, p] : s.d.column(g)) {
      t.dtilde.add(g, h, p);
      t.dtilde.add(r + g, r + h, -p);
    }
    for (const auto& [h, p] : s.u.column(g)) t.dtilde.add(g, r + h, p);
    for (const auto& [h, p] : s.d1.column(g)) t.dtilde.add(g, unit, p);
    t.chi.add(g, r + g, LaurentPoly(1));
  }
  for (const auto& [h, p] : s.d2.column(0)) t.dtilde.add(unit, r + h, p);
  t.dtilde.require_homogeneous();
  t.chi.require_homogeneous();
  return t;
}

TildeComplex tilde_tensor(const SOComplex& a, const SOComplex& b) {
  const TildeComplex ta = assemble_tilde(a);
  const TildeComplex tb = assemble_tilde(b);
  const auto& ma = *ta.module;
  const auto& mb = *tb.module;
  const std::size_t ra = ma.rank();
  const std::size_t rb = mb.rank();
  std::vector<Generator> gens;
  gens.reserve(ra * rb);
  for (std::size_t x = 0; x < ra; ++x)
    for (std::size_t y = 0; y < rb; ++y)
      gens.push_back({"(" + ma[x].id + "," + mb[y].id + ")", ma[x].gr + mb[y].gr, ma[x].iota + mb[y].iota});
  auto module = std::make_shared<const BigradedModule>(std::move(gens));
  auto idx = [rb](std::size_t x, std::size_t y) { return x * rb + y; };

  auto product = [&](const LambdaMap& fa, const LambdaMap& fb, int degree) {
    LambdaMap out(module, module, degree);
    for (std::size_t x = 0; x < ra; ++x) {
      const Rational eps(parity_sign(ma[x].gr));
      for (std::size_t y = 0; y < rb; ++y) {
        for (const auto& [x2, p] : fa.column(x)) out.add(idx(x, y), idx(x2, y), p);
        for (const auto& [y2, p] : fb.column(y)) out.add(idx(x, y), idx(x, y2), eps * p);
      }
    }
    return out;
  };
  TildeComplex t{module, product(ta.dtilde, tb.dtilde, -1), product(ta.chi, tb.chi, 3)};
  t.dtilde.require_homogeneous();
  t.chi.require_homogeneous();
  return t;
}

SOComplex tensor(const SOComplex& a, const SOComplex& b) {
  if (auto ra = validate(a); !ra.ok) throw InvalidComplex("tensor: left factor invalid: " + ra.str());
  if (auto rb = validate(b); !rb.ok) throw InvalidComplex("tensor: right factor invalid: " + rb.str());
  if (!a.d.is_zero()) throw UnsupportedTensor("tensor: left factor must have d = 0");
  if (!a.d2.is_zero()) throw UnsupportedTensor("tensor: left factor must have D2 = 0");

  const auto& ma = *a.module;
  const auto& mb = *b.module;
  const std::size_t ra = ma.rank();
  const std::size_t rb = mb.rank();
  const std::string pad_a = theta_power(arity(ma));
  const std::string pad_b = theta_power(arity(mb));

  std::vector<Generator> gens;
  gens.reserve(2 * ra * rb + ra + rb);
  for (std::size_t x = 0; x < ra; ++x)
    for (std::size_t y = 0; y < rb; ++y)
      gens.push_back({ma[x].id + kTensorSep + mb[y].id, ma[x].gr + mb[y].gr, ma[x].iota + mb[y].iota});
  for (std::size_t x = 0; x < ra; ++x)
    for (std::size_t y = 0; y < rb; ++y)
      gens.push_back(
          {underline(ma[x].id) + kTensorSep + mb[y].id, ma[x].gr + 3 + mb[y].gr, ma[x].iota + mb[y].iota});
  for (std::size_t x = 0; x < ra; ++x) gens.push_back({ma[x].id + kTensorSep + pad_b, ma[x].gr, ma[x].iota});
  for (std::size_t y = 0; y < rb; ++y) gens.push_back({pad_a + kTensorSep + mb[y].id, mb[y].gr, mb[y].iota});
  auto module = std::make_shared<const BigradedModule>(std::move(gens));

  auto s1 = [rb](std::size_t x, std::size_t y) { return x * rb + y; };
  auto s2 = [ra, rb](std::size_t x, std::size_t y) { return ra * rb + x * rb + y; };
  auto s3 = [ra, rb](std::size_t x) { return 2 * ra * rb + x; };
  auto s4 = [ra, rb](std::size_t y) { return 2 * ra * rb + ra + y; };

  SOComplex out = make_complex(a.name + " # " + b.name, module);
  const std::size_t one = 0;  // the Λ-line generator

  for (std::size_t x = 0; x < ra; ++x) {
    for (std::size_t y = 0; y < rb; ++y) {
      // Column A⊗B of d''.
      for (const auto& [y2, p] : b.d.column(y)) out.d.add(s1(x, y), s1(x, y2), -p);
      for (const auto& [x2, p] : a.u.column(x)) out.d.add(s1(x, y), s2(x2, y), p);
      for (const auto& [y2, p] : b.u.column(y)) out.d.add(s1(x, y), s2(x, y2), -p);
      for (const auto& [o, p] : b.d1.column(y)) out.d.add(s1(x, y), s3(x), -p);
      for (const auto& [o, p] : a.d1.column(x)) out.d.add(s1(x, y), s4(y), p);
      // Column A̲⊗B of d''.
      for (const auto& [y2, p] : b.d.column(y)) out.d.add(s2(x, y), s2(x, y2), p);
      // U'' on the first two summands.
      for (const auto& [x2, p] : a.u.column(x)) {
        out.u.add(s1(x, y), s1(x2, y), p);
        out.u.add(s2(x, y), s2(x2, y), p);
      }
      for (const auto& [o, p] : a.d1.column(x)) out.u.add(s2(x, y), s4(y), p);
    }
    // Column A: only nonzero in d'' when the right factor has D2 != 0.
    for (const auto& [y2, p] : b.d2.column(one)) out.d.add(s3(x), s2(x, y2), -p);
    for (const auto& [x2, p] : a.u.column(x)) out.u.add(s3(x), s3(x2), p);
    for (const auto& [o, p] : a.d1.column(x)) out.d1.add(s3(x), one, p);
  }
  for (std::size_t y = 0; y < rb; ++y) {
    for (const auto& [y2, p] : b.d.column(y)) out.d.add(s4(y), s4(y2), p);
    for (const auto& [y2, p] : b.u.column(y)) out.u.add(s4(y), s4(y2), p);
    for (const auto& [o, p] : b.d1.column(y)) out.d1.add(s4(y), one, p);
  }
  for (const auto& [y2, p] : b.d2.column(one)) out.d2.add(one, s4(y2), p);

  const auto report = validate(out);
  if (!report.ok) throw std::logic_error("tensor: product fails the SO-complex axioms: " + report.str());
  return out;
}

SOComplex build_y1() {
  auto module = std::make_shared<const BigradedModule>(
      std::vector<Generator>{{kAlpha, 1, rat(1, 120)}, {kBeta, 5, rat(49, 120)}});
  SOComplex s = make_complex("Y_1", module);
  constexpr std::size_t alpha = 0;
  constexpr std::size_t beta = 1;
  s.u.add(beta, alpha, LaurentPoly(4));
  s.u.add(alpha, beta, LaurentPoly::monomial(Rational(6), -1));
  s.d1.add(alpha, 0, LaurentPoly(1));
  s.u.require_homogeneous();
  s.d1.require_homogeneous();
  return s;
}

SOComplex build_yn(int n) {
  if (n < 1) throw std::invalid_argument("build_yn: n must be at least 1, got " + std::to_string(n));
  const SOComplex y1 = build_y1();
  SOComplex y = y1;
  for (int k = 2; k <= n; ++k) y = tensor(y1, y);
  y.name = "Y_" + std::to_string(n);
  return y;
}

LaurentPoly fk(int k, const std::string& sigma) {
  if (k < 0) throw std::invalid_argument("fk: k must be non-negative");
  if (sigma != kAlpha && sigma != kBeta) throw std::invalid_argument("fk: sigma must be α or β");
  if (k == 0) return LaurentPoly(1);
  static const SOComplex y1 = build_y1();
  LambdaVector v{{*y1.module->index_of(sigma), LaurentPoly(1)}};
  for (int j = 0; j < k - 1; ++j) v = y1.u.apply(v);
  v = y1.d1.apply(v);
  auto it = v.find(0);
  return it == v.end() ? LaurentPoly() : it->second;
}

SOComplex regrade(const SOComplex& s, std::size_t gen, int shift) {
  std::vector<Generator> gens = s.module->generators();
  gens.at(gen).gr += 8 * shift;
  gens.at(gen).iota += Rational(shift);
  auto module = std::make_shared<const BigradedModule>(std::move(gens));
  SOComplex out = make_complex(s.name, module);

  // New generator g' = x^s g: entries out of g gain x^s, entries into g gain x^-s.
  auto rescale = [&](const LambdaMap& f, LambdaMap& g, bool src_is_c, bool tgt_is_c) {
    for (std::size_t from = 0; from < f.source()->rank(); ++from) {
      for (const auto& [to, p] : f.column(from)) {
        int e = 0;
        if (src_is_c && from == gen) e += shift;
        if (tgt_is_c && to == gen) e -= shift;
        g.add(from, to, p.shifted(e));
      }
    }
  };
  rescale(s.d, out.d, true, true);
  rescale(s.u, out.u, true, true);
  rescale(s.d1, out.d1, true, false);
  rescale(s.d2, out.d2, false, true);
  return out;
}

}  // namespace sogamma
