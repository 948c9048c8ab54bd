#include "sogamma/grmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sogamma {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

// --- BigradedModule ---------------------------------------------------------

BigradedModule::BigradedModule(std::vector<Generator> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) index_.try_emplace(gens_[i].id, i);
}

std::shared_ptr<const BigradedModule> BigradedModule::lambda_line() {
  static const auto line = std::make_shared<const BigradedModule>(std::vector<Generator>{{"1", 0, Rational(0)}});
  return line;
}

std::optional<std::size_t> BigradedModule::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> BigradedModule::duplicate_ids() const {
  std::vector<std::string> dups;
  std::unordered_set<std::string> seen;
  std::unordered_set<std::string> reported;
  for (const auto& g : gens_) {
    if (!seen.insert(g.id).second && reported.insert(g.id).second) dups.push_back(g.id);
  }
  return dups;
}

// --- SliceBasis -------------------------------------------------------------

std::optional<std::size_t> SliceBasis::position(std::size_t gen) const {
  if (gen >= position_of.size() || position_of[gen] < 0) return std::nullopt;
  return static_cast<std::size_t>(position_of[gen]);
}

SliceBasis slice_basis(const BigradedModule& module, int k) {
  SliceBasis basis;
  basis.degree = k;
  basis.position_of.assign(module.rank(), -1);
  for (std::size_t g = 0; g < module.rank(); ++g) {
    const int diff = k - module[g].gr;
    if (floor_mod(diff, 8) != 0) continue;
    const int m = diff / 8;
    basis.elements.push_back({g, m, module[g].iota + Rational(m)});
  }
  std::stable_sort(basis.elements.begin(), basis.elements.end(),
                   [](const SliceElement& a, const SliceElement& b) {
                     if (a.level != b.level) return a.level < b.level;
                     return a.gen < b.gen;
                   });
  for (std::size_t i = 0; i < basis.elements.size(); ++i)
    basis.position_of[basis.elements[i].gen] = static_cast<long>(i);
  return basis;
}

// --- QMatrix ----------------------------------------------------------------

namespace {

SparseVec::const_iterator find_index(const SparseVec& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  return (it != v.end() && it->first == idx) ? it : v.end();
}

}  // namespace

Rational QMatrix::at(std::size_t r, std::size_t c) const {
  auto it = find_index(data[r], c);
  return it == data[r].end() ? Rational(0) : it->second;
}

void QMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (v.is_zero()) return;
  auto& row = data[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

bool QMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const SparseVec& r) { return r.empty(); });
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& x) const {
  std::vector<Rational> y(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : data[r])
      if (!x[c].is_zero()) y[r] += v * x[c];
  return y;
}

Rational QMatrix::row_dot(std::size_t r, const SparseVec& x) const {
  Rational acc;
  const auto& row = data[r];
  auto a = row.begin();
  auto b = x.begin();
  while (a != row.end() && b != x.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      acc += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return acc;
}

std::vector<std::vector<Rational>> QMatrix::dense() const {
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : data[r]) out[r][c] = v;
  return out;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: dimension mismatch");
  QMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, av] : a.data[r])
      for (const auto& [c, bv] : b.data[k]) acc[c] += av * bv;
    for (auto& [c, v] : acc)
      if (!v.is_zero()) out.data[r].emplace_back(c, std::move(v));
  }
  return out;
}

QMatrix stack(const QMatrix& top, const QMatrix& bottom) {
  if (top.cols != bottom.cols) throw std::invalid_argument("stack: column mismatch");
  QMatrix out = top;
  out.rows += bottom.rows;
  out.data.insert(out.data.end(), bottom.data.begin(), bottom.data.end());
  return out;
}

// --- LambdaMap --------------------------------------------------------------

LambdaMap::LambdaMap(ModulePtr source, ModulePtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), cols_(source_->rank()) {}

LambdaMap LambdaMap::checked(ModulePtr source, ModulePtr target, int degree,
                             const std::vector<std::tuple<std::size_t, std::size_t, LaurentPoly>>& entries) {
  LambdaMap f(std::move(source), std::move(target), degree);
  for (const auto& [from, to, p] : entries) f.add(from, to, p);
  f.require_homogeneous();
  return f;
}

void LambdaMap::add(std::size_t from, std::size_t to, const LaurentPoly& p) {
  if (from >= source_->rank() || to >= target_->rank()) throw std::out_of_range("LambdaMap::add: index out of range");
  if (p.is_zero()) return;
  auto& col = cols_[from];
  auto [it, inserted] = col.try_emplace(to, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) col.erase(it);
}

LaurentPoly LambdaMap::entry(std::size_t from, std::size_t to) const {
  auto it = cols_[from].find(to);
  return it == cols_[from].end() ? LaurentPoly() : it->second;
}

std::size_t LambdaMap::nonzero_entries() const {
  return std::accumulate(cols_.begin(), cols_.end(), std::size_t{0},
                         [](std::size_t n, const auto& c) { return n + c.size(); });
}

std::vector<std::string> LambdaMap::homogeneity_violations() const {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < cols_.size(); ++g) {
    const auto& src = (*source_)[g];
    for (const auto& [h, poly] : cols_[g]) {
      const auto& tgt = (*target_)[h];
      for (const auto& [p, c] : poly.terms()) {
        if (tgt.gr + 8 * p == src.gr + degree_) continue;
        std::ostringstream os;
        os << src.id << " -> " << tgt.id << ": term " << LaurentPoly::monomial(c, p) << " lands in gr "
           << tgt.gr + 8 * p << ", expected " << src.gr + degree_;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

void LambdaMap::require_homogeneous() const {
  auto v = homogeneity_violations();
  if (!v.empty()) throw InvalidMap("map is not homogeneous of degree " + std::to_string(degree_) + ": " + v.front());
}

LambdaVector LambdaMap::apply(const LambdaVector& v) const {
  LambdaVector out;
  for (const auto& [g, coeff] : v) {
    for (const auto& [h, poly] : cols_[g]) {
      auto& slot = out[h];
      slot += coeff * poly;
      if (slot.is_zero()) out.erase(h);
    }
  }
  return out;
}

void LambdaMap::check_compatible(const LambdaMap& o) const {
  if (source_->rank() != o.source_->rank() || target_->rank() != o.target_->rank())
    throw std::invalid_argument("LambdaMap: incompatible modules");
  if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("LambdaMap: adding maps of different degree");
}

LambdaMap& LambdaMap::operator+=(const LambdaMap& o) {
  check_compatible(o);
  if (is_zero()) degree_ = o.degree_;
  for (std::size_t g = 0; g < o.cols_.size(); ++g)
    for (const auto& [h, p] : o.cols_[g]) add(g, h, p);
  return *this;
}

LambdaMap& LambdaMap::operator-=(const LambdaMap& o) { return *this += -o; }

LambdaMap LambdaMap::operator-() const {
  LambdaMap out = *this;
  for (auto& col : out.cols_)
    for (auto& [h, p] : col) p = -p;
  return out;
}

bool operator==(const LambdaMap& a, const LambdaMap& b) {
  if (a.source_->rank() != b.source_->rank() || a.target_->rank() != b.target_->rank()) return false;
  return a.cols_ == b.cols_;
}

LambdaMap compose(const LambdaMap& outer, const LambdaMap& inner) {
  if (inner.target()->rank() != outer.source()->rank())
    throw std::invalid_argument("compose: module mismatch");
  LambdaMap out(inner.source(), outer.target(), inner.degree() + outer.degree());
  for (std::size_t g = 0; g < inner.source()->rank(); ++g)
    for (const auto& [mid, p] : inner.column(g))
      for (const auto& [h, q] : outer.column(mid)) out.add(g, h, p * q);
  return out;
}

QMatrix restrict_to_slice(const LambdaMap& f, const SliceBasis& src, const SliceBasis& tgt) {
  QMatrix m(tgt.size(), src.size());
  const auto& target = *f.target();
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto& e = src.elements[col];
    for (const auto& [h, poly] : f.column(e.gen)) {
      for (const auto& [p, c] : poly.terms()) {
        const int power = e.power + p;
        auto pos = tgt.position(h);
        if (!pos || tgt.elements[*pos].power != power) {
          throw InvalidMap("restrict_to_slice: entry " + (*f.source())[e.gen].id + " -> " + target[h].id +
                           " is not homogeneous of degree " + std::to_string(f.degree()));
        }
        m.add(*pos, col, c);
      }
    }
  }
  return m;
}

QMatrix restrict_to_slice(const LambdaMap& f, int k) {
  return restrict_to_slice(f, slice_basis(*f.source(), k), slice_basis(*f.target(), k + f.degree()));
}

// --- QVector ----------------------------------------------------------------

std::optional<Rational> QVector::deg_I() const {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    const auto& level = slice->elements[i].level;
    if (!best || *best < level) best = level;
  }
  return best;
}

LambdaVector QVector::to_lambda() const {
  LambdaVector out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    const auto& e = slice->elements[i];
    out[e.gen] += LaurentPoly::monomial(coords[i], e.power);
  }
  return out;
}

QVector make_qvector(std::shared_ptr<const SliceBasis> slice, const SparseVec& v) {
  QVector out{std::move(slice), {}};
  out.coords.assign(out.slice->size(), Rational(0));
  for (const auto& [i, c] : v) out.coords[i] = c;
  return out;
}

}  // namespace sogamma
