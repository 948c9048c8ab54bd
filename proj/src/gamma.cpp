#include "sogamma/gamma.hpp"

#include <exception>
#include <map>

#include "sogamma/linalg.hpp"
#include "sogamma/socx_json.hpp"

namespace sogamma {

namespace detail {

namespace {

/// row (1 x rows(m)) times m.
SparseVec row_times(const SparseVec& row, const QMatrix& m) {
  std::vector<Rational> acc(m.cols);
  std::vector<bool> touched(m.cols, false);
  for (const auto& [r, v] : row)
    for (const auto& [c, x] : m.data[r]) {
      acc[c] += v * x;
      touched[c] = true;
    }
  SparseVec out;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (touched[c] && !acc[c].is_zero()) out.emplace_back(c, std::move(acc[c]));
  return out;
}

SparseVec matrix_times(const QMatrix& m, const SparseVec& v) {
  std::vector<Rational> x(m.cols);
  for (const auto& [c, val] : v) x[c] = val;
  const auto y = m.apply(x);
  SparseVec out;
  for (std::size_t r = 0; r < y.size(); ++r)
    if (!y[r].is_zero()) out.emplace_back(r, y[r]);
  return out;
}

}  // namespace

GammaSystem positive_system(const SOComplex& s, int i) {
  const int k = 4 * i - 3;
  std::map<int, SliceBasis> slices;
  auto slice = [&](int deg) -> const SliceBasis& {
    auto it = slices.find(deg);
    if (it == slices.end()) it = slices.emplace(deg, slice_basis(*s.module, deg)).first;
    return it->second;
  };
  const auto line = BigradedModule::lambda_line();

  GammaSystem sys;
  sys.slice = std::make_shared<const SliceBasis>(slice(k));
  const std::size_t dim = sys.slice->size();
  sys.d = restrict_to_slice(s.d, *sys.slice, slice(k - 1));

  // u_steps[t]: U restricted from slice k-4t to slice k-4t-4.
  std::vector<QMatrix> u_steps;
  for (int j = 0; j < i; ++j) {
    const int deg = k - 4 * j;
    const QMatrix d1 = restrict_to_slice(s.d1, slice(deg), slice_basis(*line, deg + kDegreeD1));
    SparseVec row = d1.rows ? d1.data[0] : SparseVec{};
    for (int t = j - 1; t >= 0 && !row.empty(); --t) row = row_times(row, u_steps[static_cast<std::size_t>(t)]);
    QMatrix functional(1, dim);
    functional.data[0] = std::move(row);
    sys.d1_u.push_back(std::move(functional));
    if (j + 1 < i) u_steps.push_back(restrict_to_slice(s.u, slice(deg), slice(deg + kDegreeU)));
  }
  return sys;
}

std::vector<std::optional<SparseVec>> negative_rhs(const SOComplex& s, int i) {
  const auto line = BigradedModule::lambda_line();
  std::vector<std::optional<SparseVec>> out;
  for (int j = 0; j <= -i; ++j) {
    if ((i + j) % 2 != 0) {
      out.emplace_back(std::nullopt);
      continue;
    }
    const int source_deg = 8 * ((i + j) / 2);
    const SliceBasis src = slice_basis(*line, source_deg);
    SliceBasis cur = slice_basis(*s.module, source_deg + kDegreeD2);
    const QMatrix d2 = restrict_to_slice(s.d2, src, cur);
    SparseVec v = matrix_times(d2, {{0, Rational(1)}});
    for (int t = 0; t < j; ++t) {
      SliceBasis next = slice_basis(*s.module, cur.degree + kDegreeU);
      v = matrix_times(restrict_to_slice(s.u, cur, next), v);
      cur = std::move(next);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace detail

namespace {

void require_valid(const SOComplex& s) {
  const auto report = validate(s);
  if (!report.ok) throw InvalidComplex("complex '" + s.name + "' is not a valid SO-complex: " + report.str());
}

GammaResult gamma_positive(const SOComplex& s, int i) {
  GammaResult result{i, GammaValue::infinity(), std::nullopt};
  auto sys = detail::positive_system(s, i);
  const QMatrix& last = sys.d1_u[static_cast<std::size_t>(i - 1)];
  if (sys.slice->empty() || last.is_zero()) return result;

  QMatrix m = sys.d;
  for (int j = 0; j + 1 < i; ++j) m = stack(m, sys.d1_u[static_cast<std::size_t>(j)]);
  const auto basis = linalg::kernel(m);

  const SparseVec* best = nullptr;
  for (const auto& v : basis) {
    if (last.row_dot(0, v).is_zero()) continue;
    // Echelon vectors are sorted by leading position, so the first hit is minimal.
    best = &v;
    break;
  }
  if (!best) return result;
  const std::size_t lead = best->back().first;
  result.value = GammaValue::finite(sys.slice->elements[lead].level);
  result.witness = GammaWitness{make_qvector(sys.slice, *best), {}};
  return result;
}

/// Incrementally maintained span of column vectors, each stored with its pivot.
class SpanTracker {
 public:
  /// Reduces v against the current basis.
  SparseVec reduce(SparseVec v) const {
    for (const auto& [pivot, b] : basis_) {
      Rational coeff;
      if (!entry(v, pivot, &coeff)) continue;
      v = linalg::axpy(v, coeff / b_lead(b, pivot), b);
    }
    return v;
  }
  /// Adds v if independent; returns true when added.
  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const std::size_t pivot = r.front().first;
    basis_.emplace_back(pivot, std::move(r));
    return true;
  }
  const std::pair<std::size_t, SparseVec>& newest() const { return basis_.back(); }

  static bool entry(const SparseVec& v, std::size_t idx, Rational* out) {
    for (const auto& [i, x] : v) {
      if (i > idx) return false;
      if (i == idx) {
        *out = x;
        return true;
      }
    }
    return false;
  }

 private:
  static Rational b_lead(const SparseVec& b, std::size_t pivot) {
    Rational out;
    entry(b, pivot, &out);
    return out;
  }
  std::vector<std::pair<std::size_t, SparseVec>> basis_;
};

std::vector<SparseVec> columns_of(const QMatrix& m) {
  std::vector<SparseVec> cols(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.data[r]) cols[c].emplace_back(r, v);
  return cols;
}

GammaResult gamma_nonpositive(const SOComplex& s, int i) {
  GammaResult result{i, GammaValue::infinity(), std::nullopt};
  const int k = 4 * i - 3;
  auto slice = std::make_shared<const SliceBasis>(slice_basis(*s.module, k));
  const SliceBasis target = slice_basis(*s.module, k - 1);
  const QMatrix d = restrict_to_slice(s.d, *slice, target);
  const auto rhs = detail::negative_rhs(s, i);
  const SparseVec& b = *rhs[static_cast<std::size_t>(-i)];

  std::vector<int> free_js;
  for (int j = 0; j < -i; ++j)
    if (rhs[static_cast<std::size_t>(j)]) free_js.push_back(j);

  SpanTracker span;
  SparseVec residual = b;
  auto absorb = [&](const SparseVec& col) {
    if (!span.insert(col)) return;
    const auto& [pivot, vec] = span.newest();
    Rational coeff;
    if (SpanTracker::entry(residual, pivot, &coeff)) {
      Rational lead;
      SpanTracker::entry(vec, pivot, &lead);
      residual = linalg::axpy(residual, coeff / lead, vec);
    }
  };
  for (int j : free_js) absorb(*rhs[static_cast<std::size_t>(j)]);

  const auto dcols = columns_of(d);
  std::optional<std::size_t> prefix;  // number of alpha columns needed
  if (residual.empty()) {
    prefix = 0;
  } else {
    for (std::size_t c = 0; c < dcols.size(); ++c) {
      absorb(dcols[c]);
      if (residual.empty()) {
        prefix = c + 1;
        break;
      }
    }
  }
  if (!prefix) return result;

  Rational level(0);
  if (*prefix > 0 && Rational(0) < slice->elements[*prefix - 1].level) level = slice->elements[*prefix - 1].level;
  result.value = GammaValue::finite(level);

  // Witness: solve [-W | D_prefix] (c, alpha) = b.
  QMatrix sys(target.size(), free_js.size() + *prefix);
  for (std::size_t q = 0; q < free_js.size(); ++q)
    for (const auto& [r, v] : *rhs[static_cast<std::size_t>(free_js[q])]) sys.add(r, q, -v);
  for (std::size_t c = 0; c < *prefix; ++c)
    for (const auto& [r, v] : dcols[c]) sys.add(r, free_js.size() + c, v);
  const auto sol = linalg::solve(sys, b);
  if (!sol) throw std::logic_error("gamma: span test and solver disagree");

  GammaWitness w;
  SparseVec alpha;
  std::map<std::size_t, Rational> cs;
  for (const auto& [idx, v] : *sol) {
    if (idx < free_js.size())
      cs[idx] = v;
    else
      alpha.emplace_back(idx - free_js.size(), v);
  }
  w.alpha = make_qvector(slice, alpha);
  for (std::size_t q = 0; q < free_js.size(); ++q) {
    const int j = free_js[q];
    auto it = cs.find(q);
    if (it != cs.end()) w.a_coeffs.emplace_back(j, LaurentPoly::monomial(it->second, (i + j) / 2));
  }
  w.a_coeffs.emplace_back(-i, LaurentPoly(1));
  result.witness = std::move(w);
  return result;
}

GammaResult gamma_unchecked(const SOComplex& s, int i) {
  return i >= 1 ? gamma_positive(s, i) : gamma_nonpositive(s, i);
}

}  // namespace

GammaResult gamma(const SOComplex& s, int i) {
  require_valid(s);
  return gamma_unchecked(s, i);
}

GammaTable gamma_table(const SOComplex& s, int imin, int imax) {
  if (imin > imax) throw std::invalid_argument("gamma_table: empty range");
  require_valid(s);
  GammaTable table{s.name, std::vector<GammaResult>(static_cast<std::size_t>(imax - imin + 1))};
  std::vector<std::exception_ptr> errors(table.rows.size());
  const long n = static_cast<long>(table.rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long r = 0; r < n; ++r) {
    try {
      table.rows[static_cast<std::size_t>(r)] = gamma_unchecked(s, imin + static_cast<int>(r));
    } catch (...) {
      errors[static_cast<std::size_t>(r)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return table;
}

std::string check_witness(const SOComplex& s, const GammaResult& r) {
  if (r.value.is_infinite()) return r.witness ? "infinite value carries a witness" : "";
  if (!r.witness) return "finite value without witness";
  const auto& w = *r.witness;
  const int k = 4 * r.i - 3;
  if (!w.alpha.slice || w.alpha.slice->degree != k) return "witness is not in slice 4i-3";
  const SliceBasis fresh = slice_basis(*s.module, k);
  if (fresh.size() != w.alpha.slice->size()) return "witness slice does not match the module";
  for (std::size_t e = 0; e < fresh.size(); ++e)
    if (fresh.elements[e].gen != w.alpha.slice->elements[e].gen ||
        fresh.elements[e].power != w.alpha.slice->elements[e].power)
      return "witness slice does not match the module";

  const LambdaVector alpha = w.alpha.to_lambda();
  const auto level = w.alpha.deg_I();
  if (r.i >= 1) {
    if (!level || *level != r.value.value()) return "deg_I(alpha) differs from the value";
    if (!s.d.apply(alpha).empty()) return "alpha is not a cycle";
    LambdaVector v = alpha;
    for (int j = 0; j < r.i; ++j) {
      const bool zero = s.d1.apply(v).empty();
      if (j < r.i - 1 && !zero) return "D1 U^" + std::to_string(j) + " alpha != 0";
      if (j == r.i - 1 && zero) return "D1 U^(i-1) alpha = 0";
      v = s.u.apply(v);
    }
    return "";
  }

  const Rational expected = (level && Rational(0) < *level) ? *level : Rational(0);
  if (expected != r.value.value()) return "max(deg_I(alpha), 0) differs from the value";
  bool top_is_one = false;
  LambdaVector rhs;
  for (const auto& [j, a] : w.a_coeffs) {
    if (j < 0 || j > -r.i) return "coefficient index out of range";
    if (j == -r.i) top_is_one = (a == LaurentPoly(1));
    LambdaVector v = s.d2.apply(LambdaVector{{0, a}});
    for (int t = 0; t < j; ++t) v = s.u.apply(v);
    for (const auto& [g, p] : v) {
      rhs[g] += p;
      if (rhs[g].is_zero()) rhs.erase(g);
    }
  }
  if (!top_is_one) return "a_{-i} != 1";
  if (s.d.apply(alpha) != rhs) return "d alpha != sum U^j D2(a_j)";
  return "";
}

nlohmann::ordered_json to_json(const GammaTable& t, const SOComplex& s, bool with_witness) {
  nlohmann::ordered_json doc;
  doc["complex"] = t.complex_name;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    row["i"] = r.i;
    row["value"] = r.value.str();
    if (with_witness && r.witness) {
      nlohmann::ordered_json w;
      auto alpha = nlohmann::ordered_json::array();
      const auto& slice = *r.witness->alpha.slice;
      for (std::size_t e = 0; e < slice.size(); ++e) {
        const auto& c = r.witness->alpha.coords[e];
        if (c.is_zero()) continue;
        alpha.push_back({{"id", (*s.module)[slice.elements[e].gen].id},
                         {"pow", slice.elements[e].power},
                         {"coeff", rational_to_json(c)}});
      }
      w["alpha"] = std::move(alpha);
      if (r.i <= 0) {
        auto a = nlohmann::ordered_json::array();
        for (const auto& [j, p] : r.witness->a_coeffs) a.push_back({{"j", j}, {"terms", laurent_to_json(p)}});
        w["a"] = std::move(a);
      }
      row["witness"] = std::move(w);
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace sogamma
