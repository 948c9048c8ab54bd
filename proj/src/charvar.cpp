#include "sogamma/charvar.hpp"

#include <stdexcept>

namespace sogamma::charvar {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1, got " + std::to_string(n));
  if (n > 40) throw std::invalid_argument("n too large for enumeration: " + std::to_string(n));
}

std::uint64_t pow3(int n) {
  std::uint64_t p = 1;
  for (int k = 0; k < n; ++k) p *= 3;
  return p;
}

int irreducible_count(int n, std::uint64_t index) {
  int count = 0;
  for (int k = 0; k < n; ++k, index /= 3)
    if (index % 3 != 0) ++count;
  return count;
}

}  // namespace

int ComponentSignature::alphas() const {
  int c = 0;
  for (auto r : sigma) c += r == Rep::alpha;
  return c;
}

int ComponentSignature::betas() const {
  int c = 0;
  for (auto r : sigma) c += r == Rep::beta;
  return c;
}

std::string ComponentSignature::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (k) out += ",";
    out += sigma[k] == Rep::theta ? "θ" : (sigma[k] == Rep::alpha ? "α" : "β");
  }
  return out + ")";
}

ComponentData component_data(const ComponentSignature& sig) {
  const int j = sig.alphas();
  const int k = sig.betas();
  const int i = j + k;
  ComponentData data;
  data.cs_mod1 = rat(j + 49L * k, 120).frac();
  data.gr_mod8 = (j + 5 * k) % 8;
  data.dim_chi = i >= 1 ? 3 * (i - 1) : 0;
  data.dim_R = 3 * i;
  return data;
}

LiftedComponent lift(const ComponentSignature& sig, long l) {
  const int j = sig.alphas();
  const int k = sig.betas();
  return {sig, l, Rational(l) + rat(j + 49L * k, 120), j + 5L * k + 8 * l};
}

ComponentSignature signature_at(int n, std::uint64_t index) {
  ComponentSignature sig;
  sig.sigma.assign(static_cast<std::size_t>(n), Rep::theta);
  for (int k = n - 1; k >= 0; --k, index /= 3) sig.sigma[static_cast<std::size_t>(k)] = static_cast<Rep>(index % 3);
  return sig;
}

namespace serial {

Census enumerate_components(int n, bool keep_list) {
  require_n(n);
  Census c;
  c.n = n;
  c.total = pow3(n);
  c.by_irreducible.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t idx = 0; idx < c.total; ++idx) {
    const auto sig = signature_at(n, idx);
    ++c.by_irreducible[static_cast<std::size_t>(sig.irreducible())];
    if (keep_list) c.components.push_back(sig);
  }
  return c;
}

}  // namespace serial

namespace parallel {

Census enumerate_components(int n, bool keep_list) {
  require_n(n);
  Census c;
  c.n = n;
  c.total = pow3(n);
  const std::size_t bins = static_cast<std::size_t>(n) + 1;
  c.by_irreducible.assign(bins, 0);
  const auto total = static_cast<long long>(c.total);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < total; ++idx)
      ++local[static_cast<std::size_t>(irreducible_count(n, static_cast<std::uint64_t>(idx)))];
#pragma omp critical
    for (std::size_t b = 0; b < bins; ++b) c.by_irreducible[b] += local[b];
  }
  if (keep_list) {
    c.components.resize(c.total);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx)
      c.components[static_cast<std::size_t>(idx)] = signature_at(n, static_cast<std::uint64_t>(idx));
  }
  return c;
}

}  // namespace parallel

std::uint64_t expected_count(int n, int i) {
  if (i < 0 || i > n) return 0;
  std::uint64_t binom = 1;
  for (int t = 1; t <= i; ++t) binom = binom * static_cast<std::uint64_t>(n - i + t) / static_cast<std::uint64_t>(t);
  return binom << i;
}

ExtensionSearch find_extension_components(int n) {
  require_n(n);
  ExtensionSearch search;
  search.n = n;
  const Rational target = rat(49L * n, 120);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; j + k <= n; ++k) {
      ExtensionCandidate cand{j, k, false, 0, false};
      // l + (j + 49k)/120 = 49n/120 forces l.
      const Rational l = target - rat(j + 49L * k, 120);
      if (l.is_integer()) {
        cand.integral_lift = true;
        cand.l = l.numerator().get_si();
        cand.grading_ok = 4L * j + 8L * k + 8 * cand.l >= 8L * n;
      }
      search.examined.push_back(cand);
      if (!cand.integral_lift || !cand.grading_ok) continue;
      ComponentSignature sig;
      for (int t = 0; t < n - j - k; ++t) sig.sigma.push_back(Rep::theta);
      for (int t = 0; t < j; ++t) sig.sigma.push_back(Rep::alpha);
      for (int t = 0; t < k; ++t) sig.sigma.push_back(Rep::beta);
      search.found.push_back(lift(sig, cand.l));
    }
  }
  return search;
}

HandleBounds handle_bounds(int n, int b1) {
  if (n < 1) throw std::invalid_argument("handle_bounds: n must be at least 1");
  if (b1 < 0) throw std::invalid_argument("handle_bounds: b1 must be non-negative");
  return {n, b1, n + b1, n, n + b1};
}

nlohmann::ordered_json to_json(const Census& c, bool with_components) {
  nlohmann::ordered_json doc;
  doc["n"] = c.n;
  doc["total"] = c.total;
  auto by_dim = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.by_irreducible.size(); ++i) by_dim.push_back({{"i", i}, {"count", c.by_irreducible[i]}});
  doc["by_dim"] = std::move(by_dim);
  if (with_components) {
    auto comps = nlohmann::ordered_json::array();
    for (const auto& sig : c.components) {
      const auto data = component_data(sig);
      comps.push_back({{"sigma", sig.str()},
                       {"cs", data.cs_mod1.str()},
                       {"gr_mod8", data.gr_mod8},
                       {"dim_chi", data.dim_chi},
                       {"dim_R", data.dim_R}});
    }
    doc["components"] = std::move(comps);
  }
  return doc;
}

}  // namespace sogamma::charvar
