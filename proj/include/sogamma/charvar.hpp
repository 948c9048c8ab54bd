#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sogamma/rational.hpp"

namespace sogamma::charvar {

enum class Rep : std::uint8_t { theta, alpha, beta };

/// Connected component χ(σ) of the SU(2) character variety of #_n Σ(2,3,5),
/// indexed by an ordered tuple over {θ, α, β}.
struct ComponentSignature {
  std::vector<Rep> sigma;

  int alphas() const;
  int betas() const;
  int irreducible() const { return alphas() + betas(); }
  std::string str() const;
};

struct ComponentData {
  Rational cs_mod1;  // (j + 49k)/120 reduced into [0, 1)
  int gr_mod8 = 0;   // (j + 5k) mod 8
  int dim_chi = 0;   // 3(i - 1), or 0 for the trivial tuple
  int dim_R = 0;     // 3i
};

ComponentData component_data(const ComponentSignature& sig);

/// A component with a chosen integer lift l of its Chern-Simons value.
struct LiftedComponent {
  ComponentSignature signature;
  long l = 0;
  Rational cs_lift;  // l + (j + 49k)/120
  long gr_lift = 0;  // j + 5k + 8l
};

LiftedComponent lift(const ComponentSignature& sig, long l);

struct Census {
  int n = 0;
  std::uint64_t total = 0;
  /// by_irreducible[i] = number of components with i irreducible factors.
  std::vector<std::uint64_t> by_irreducible;
  /// Filled only when requested.
  std::vector<ComponentSignature> components;
};

/// Signature number `index` in base-3 order (last factor varies fastest).
ComponentSignature signature_at(int n, std::uint64_t index);

namespace serial {
Census enumerate_components(int n, bool keep_list = false);
}
namespace parallel {
Census enumerate_components(int n, bool keep_list = false);
}
inline Census enumerate_components(int n, bool keep_list = false) { return parallel::enumerate_components(n, keep_list); }

/// 2^i * C(n, i).
std::uint64_t expected_count(int n, int i);

/// One examined (j, k) class in the extension search.
struct ExtensionCandidate {
  int j = 0;
  int k = 0;
  bool integral_lift = false;
  long l = 0;
  bool grading_ok = false;
};

struct ExtensionSearch {
  int n = 0;
  std::vector<ExtensionCandidate> examined;
  std::vector<LiftedComponent> found;
};

/// Exhaustive search over all (j, k), j + k <= n, for components admitting
/// an integer lift with cs_lift = 49n/120 and 4j + 8k + 8l >= 8n.
ExtensionSearch find_extension_components(int n);

struct HandleBounds {
  int n = 0;
  int b1 = 0;
  int min_1handles = 0;
  int min_2handles = 0;
  int min_23handles = 0;
};

HandleBounds handle_bounds(int n, int b1);

nlohmann::ordered_json to_json(const Census& c, bool with_components);

}  // namespace sogamma::charvar
