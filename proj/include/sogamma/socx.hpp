#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sogamma/grmod.hpp"

namespace sogamma {

class InvalidComplex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedTensor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Homological degrees of the four structure maps.
inline constexpr int kDegreeD = -1;
inline constexpr int kDegreeU = -4;
inline constexpr int kDegreeD1 = -1;
inline constexpr int kDegreeD2 = -4;

/// I-graded SO-complex presented by (C, d, U, D1, D2). D1 lands in the
/// rank-one Lambda-line, D2 starts from it.
struct SOComplex {
  std::string name;
  ModulePtr module;
  LambdaMap d;
  LambdaMap u;
  LambdaMap d1;
  LambdaMap d2;

  std::size_t rank() const { return module->rank(); }
};

/// Complex on `module` with all four maps zero.
SOComplex make_complex(std::string name, ModulePtr module);

struct Violation {
  std::string axiom;
  std::string where;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  std::string str() const;
};

/// Checks id uniqueness, homogeneity of d/U/D1/D2, strict I-decrease of every
/// term, and d^2 = 0, D1 d = 0, d D2 = 0, dU - Ud = D2 D1 as exact
/// Laurent-matrix identities. Never throws for mathematical failures.
ValidationReport validate(const SOComplex& s);

/// C ⊕ C_(3,0) ⊕ Λ with the block differential and χ(a, b, r) = (0, a, 0).
struct TildeComplex {
  ModulePtr module;
  LambdaMap dtilde;
  LambdaMap chi;
};

/// Throws InvalidComplex unless validate(s).ok.
TildeComplex assemble_tilde(const SOComplex& s);

/// Tilde-level product d⊗1 + ε⊗d', χ⊗1 + ε⊗χ' on tilde(A) ⊗ tilde(B), with ε
/// the sign (-1)^gr. Used to cross-check rank and square-zero identities.
TildeComplex tilde_tensor(const SOComplex& a, const SOComplex& b);

/// Connected-sum product for a left factor with d = 0 and D2 = 0:
/// C'' = A⊗B ⊕ A̲⊗B ⊕ A ⊕ B, A̲ being A shifted up by 3 in gr.
/// Throws UnsupportedTensor when the left factor has d != 0 or D2 != 0, and
/// std::logic_error if the product fails validation.
SOComplex tensor(const SOComplex& a, const SOComplex& b);

/// Σ(2,3,5): α (1, 1/120), β (5, 49/120); D1 α = 1, U β = 4α, U α = 6x^-1 β.
SOComplex build_y1();

/// n-fold product tensor(Y1, tensor(Y1, ...)); throws std::invalid_argument for n < 1.
SOComplex build_yn(int n);

/// F_0 = 1, F_k(σ) = D1 U^(k-1) σ on the Σ(2,3,5) complex; σ is "α" or "β".
LaurentPoly fk(int k, const std::string& sigma);

/// Replaces generator g by x^s g.
SOComplex regrade(const SOComplex& s, std::size_t gen, int shift);

/// Generator-name atoms used in tensor ids.
inline const std::string kTheta = "Θ";
inline const std::string kAlpha = "α";
inline const std::string kBeta = "β";
inline const std::string kTensorSep = "⊗";
/// Underlined (gr + 3) copy of a generator name.
std::string underline(const std::string& id);
std::vector<std::string> split_tuple(const std::string& id);

/// Tensor generator with exactly one plain factor in {α, β}, all others in
/// {Θ, α̲, β̲}. a counts α-type factors, b counts β-type factors.
struct SpecialGenerator {
  std::size_t index = 0;
  int a = 0;
  int b = 0;
};

std::vector<SpecialGenerator> special_generators(const SOComplex& s);

}  // namespace sogamma
