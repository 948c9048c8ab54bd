#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sogamma/laurent.hpp"
#include "sogamma/rational.hpp"

namespace sogamma {

/// Thrown when a Lambda-linear map is not homogeneous for its declared degree.
class InvalidMap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator of a free summand Q[x^±1]_(gr, iota).
struct Generator {
  std::string id;
  int gr = 0;
  Rational iota;
};

/// Free bigraded module over Q[x^±1] with a finite ordered generator list.
/// x^m g sits in homological degree gr(g) + 8m and I-level iota(g) + m.
class BigradedModule {
 public:
  BigradedModule() = default;
  explicit BigradedModule(std::vector<Generator> generators);

  /// Rank-one module with generator "1" in bidegree (0, 0); the target of D1.
  static std::shared_ptr<const BigradedModule> lambda_line();

  std::size_t rank() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  /// Ids that occur more than once, in order of first repetition.
  std::vector<std::string> duplicate_ids() const;

 private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, std::size_t> index_;
};

using ModulePtr = std::shared_ptr<const BigradedModule>;

/// x^m g, one basis element of a homogeneous slice.
struct SliceElement {
  std::size_t gen = 0;
  int power = 0;
  Rational level;
};

/// Q-basis of the homological-degree-k part of a module, sorted ascending by
/// (I-level, generator index).
struct SliceBasis {
  int degree = 0;
  std::vector<SliceElement> elements;
  /// position_of[g] is the slice position of generator g, or -1.
  std::vector<long> position_of;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  std::optional<std::size_t> position(std::size_t gen) const;
};

SliceBasis slice_basis(const BigradedModule& module, int k);

/// Sparse vector over Q: (index, value) pairs, strictly increasing index,
/// no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Row-major sparse matrix over Q.
struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> data;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}

  Rational at(std::size_t r, std::size_t c) const;
  /// Adds v at (r, c).
  void add(std::size_t r, std::size_t c, const Rational& v);
  bool is_zero() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  Rational row_dot(std::size_t r, const SparseVec& x) const;
  std::vector<std::vector<Rational>> dense() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

QMatrix multiply(const QMatrix& a, const QMatrix& b);
/// Vertical concatenation; column counts must agree.
QMatrix stack(const QMatrix& top, const QMatrix& bottom);

/// Element of a free module: generator index -> Laurent coefficient.
using LambdaVector = std::map<std::size_t, LaurentPoly>;

/// Lambda-linear map between free bigraded modules, stored as sparse
/// Laurent-polynomial matrix columns. Entry (g -> h) is the coefficient of h
/// in the image of g.
class LambdaMap {
 public:
  LambdaMap() = default;
  LambdaMap(ModulePtr source, ModulePtr target, int degree);

  /// Builds a map and throws InvalidMap unless every term is homogeneous.
  static LambdaMap checked(ModulePtr source, ModulePtr target, int degree,
                           const std::vector<std::tuple<std::size_t, std::size_t, LaurentPoly>>& entries);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  int degree() const { return degree_; }

  void add(std::size_t from, std::size_t to, const LaurentPoly& p);
  LaurentPoly entry(std::size_t from, std::size_t to) const;
  /// Column of `from`: target index -> polynomial.
  const std::map<std::size_t, LaurentPoly>& column(std::size_t from) const { return cols_[from]; }
  std::size_t nonzero_entries() const;
  bool is_zero() const { return nonzero_entries() == 0; }

  /// One line per term c*x^p with gr(h) + 8p != gr(g) + degree.
  std::vector<std::string> homogeneity_violations() const;
  void require_homogeneous() const;

  LambdaVector apply(const LambdaVector& v) const;

  LambdaMap& operator+=(const LambdaMap& o);
  LambdaMap& operator-=(const LambdaMap& o);
  LambdaMap operator-() const;
  friend LambdaMap operator+(LambdaMap a, const LambdaMap& b) { return a += b; }
  friend LambdaMap operator-(LambdaMap a, const LambdaMap& b) { return a -= b; }

  /// Entrywise equality; modules are compared by rank only.
  friend bool operator==(const LambdaMap& a, const LambdaMap& b);

 private:
  void check_compatible(const LambdaMap& o) const;

  ModulePtr source_;
  ModulePtr target_;
  int degree_ = 0;
  std::vector<std::map<std::size_t, LaurentPoly>> cols_;
};

/// outer ∘ inner; degrees add.
LambdaMap compose(const LambdaMap& outer, const LambdaMap& inner);

/// Finite-dimensional piece of f from slice k of the source to slice
/// k + degree(f) of the target, with rows/columns in canonical slice order.
/// Throws InvalidMap if f is not homogeneous.
QMatrix restrict_to_slice(const LambdaMap& f, int k);
QMatrix restrict_to_slice(const LambdaMap& f, const SliceBasis& src, const SliceBasis& tgt);

/// Vector in a slice, dense coordinates in canonical order.
struct QVector {
  std::shared_ptr<const SliceBasis> slice;
  std::vector<Rational> coords;

  /// Max I-level over nonzero coordinates; nullopt stands for -infinity.
  std::optional<Rational> deg_I() const;
  /// Lambda-module element represented by this vector.
  LambdaVector to_lambda() const;
};

QVector make_qvector(std::shared_ptr<const SliceBasis> slice, const SparseVec& v);

/// Floor division and non-negative modulus.
int floor_div(int a, int b);
int floor_mod(int a, int b);

}  // namespace sogamma
