#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sogamma/grmod.hpp"
#include "sogamma/socx.hpp"

namespace sogamma {

/// Non-negative rational or +infinity.
class GammaValue {
 public:
  static GammaValue infinity() { return GammaValue(); }
  static GammaValue finite(Rational r) { return GammaValue(std::move(r)); }

  bool is_infinite() const { return !value_; }
  const Rational& value() const { return *value_; }
  /// "p/q" or "inf".
  std::string str() const { return value_ ? value_->str() : "inf"; }

  friend bool operator==(const GammaValue&, const GammaValue&) = default;

 private:
  GammaValue() = default;
  explicit GammaValue(Rational r) : value_(std::move(r)) {}
  std::optional<Rational> value_;
};

/// Certificate for a finite value. For i >= 1 only `alpha` is used; for
/// i <= 0, a_coeffs lists (j, a_j) with a_{-i} = 1.
struct GammaWitness {
  QVector alpha;
  std::vector<std::pair<int, LaurentPoly>> a_coeffs;
};

struct GammaResult {
  int i = 0;
  GammaValue value = GammaValue::infinity();
  std::optional<GammaWitness> witness;
};

struct GammaTable {
  std::string complex_name;
  std::vector<GammaResult> rows;
};

/// Γ(i) by one echelon elimination per i. Throws InvalidComplex when the
/// complex fails validation.
GammaResult gamma(const SOComplex& s, int i);

/// Rows for imin..imax, computed concurrently. Throws std::invalid_argument
/// when imin > imax.
GammaTable gamma_table(const SOComplex& s, int imin, int imax);

/// Largest slice dimension gamma_oracle accepts.
inline constexpr std::size_t kOracleMaxSliceDim = 400;

/// Independent check: scans I-level thresholds in ascending order and tests
/// feasibility on each truncated basis with a fresh dense rank computation.
/// Throws std::length_error above kOracleMaxSliceDim.
GammaResult gamma_oracle(const SOComplex& s, int i);

/// Re-evaluates a witness through slice restrictions only. Returns an empty
/// string when the witness certifies the value, otherwise the reason.
std::string check_witness(const SOComplex& s, const GammaResult& r);

/// Witness generator ids are resolved against `s`.
nlohmann::ordered_json to_json(const GammaTable& t, const SOComplex& s, bool with_witness);

namespace detail {

/// Q-matrices of the Γ(i) problem on slice 4i-3.
struct GammaSystem {
  std::shared_ptr<const SliceBasis> slice;
  QMatrix d;                         // slice -> slice - 1
  std::vector<QMatrix> d1_u;         // d1_u[j]: 1 x dim, D1 U^j restricted
};

GammaSystem positive_system(const SOComplex& s, int i);

/// Restriction of U^j D2 applied to x^((i+j)/2), for 0 <= j <= -i, as
/// vectors in slice 4i-4; entries with the wrong parity are std::nullopt.
std::vector<std::optional<SparseVec>> negative_rhs(const SOComplex& s, int i);

}  // namespace detail

}  // namespace sogamma
