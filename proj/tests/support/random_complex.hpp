#pragma once

// Hand-rolled generators for valid SO-complexes.

#include <random>
#include <string>
#include <vector>

#include "sogamma/socx.hpp"

namespace testsupport {

using sogamma::Generator;
using sogamma::LambdaMap;
using sogamma::LaurentPoly;
using sogamma::ModulePtr;
using sogamma::Rational;
using sogamma::SOComplex;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational nonzero_coeff(Rng& rng) {
  int c = 0;
  while (c == 0) c = uniform(rng, -3, 3);
  return Rational(c);
}

/// Copies every entry of the four maps of `s` onto `out`, whose module
/// extends s.module by appending generators.
inline void copy_maps(const SOComplex& s, SOComplex& out) {
  for (std::size_t g = 0; g < s.rank(); ++g) {
    for (const auto& [h, p] : s.d.column(g)) out.d.add(g, h, p);
    for (const auto& [h, p] : s.u.column(g)) out.u.add(g, h, p);
    for (const auto& [h, p] : s.d1.column(g)) out.d1.add(g, h, p);
  }
  for (const auto& [h, p] : s.d2.column(0)) out.d2.add(0, h, p);
}

/// s ⊕ (e -> f) pairs with d(e) = c f, all other maps zero on the pair.
inline SOComplex add_acyclic_pairs(const SOComplex& s, Rng& rng, int pairs) {
  std::vector<Generator> gens = s.module->generators();
  for (int k = 0; k < pairs; ++k) {
    const int gr = uniform(rng, -6, 9);
    const Rational iota = sogamma::rat(uniform(rng, -60, 180), 120);
    const Rational drop = sogamma::rat(uniform(rng, 1, 90), 120);
    gens.push_back({"e" + std::to_string(k), gr, iota});
    gens.push_back({"f" + std::to_string(k), gr - 1, iota - drop});
  }
  auto module = std::make_shared<const sogamma::BigradedModule>(std::move(gens));
  SOComplex out = sogamma::make_complex(s.name + "+pairs", module);
  copy_maps(s, out);
  for (int k = 0; k < pairs; ++k) {
    const std::size_t e = s.rank() + 2 * static_cast<std::size_t>(k);
    out.d.add(e, e + 1, LaurentPoly(nonzero_coeff(rng)));
  }
  return out;
}

/// Direct sum of two complexes with D2 = 0.
inline SOComplex direct_sum(const SOComplex& a, const SOComplex& b) {
  std::vector<Generator> gens = a.module->generators();
  for (auto g : b.module->generators()) {
    g.id = "'" + g.id;
    gens.push_back(std::move(g));
  }
  auto module = std::make_shared<const sogamma::BigradedModule>(std::move(gens));
  SOComplex out = sogamma::make_complex(a.name + "+" + b.name, module);
  copy_maps(a, out);
  const std::size_t off = a.rank();
  for (std::size_t g = 0; g < b.rank(); ++g) {
    for (const auto& [h, p] : b.d.column(g)) out.d.add(off + g, off + h, p);
    for (const auto& [h, p] : b.u.column(g)) out.u.add(off + g, off + h, p);
    for (const auto& [h, p] : b.d1.column(g)) out.d1.add(off + g, h, p);
  }
  return out;
}

/// One generator p in gr -4 with D2(1) = c p.
inline SOComplex point_with_d2(const Rational& iota, const Rational& c) {
  auto module = std::make_shared<const sogamma::BigradedModule>(std::vector<Generator>{{"p", -4, iota}});
  SOComplex s = sogamma::make_complex("P", module);
  s.d2.add(0, 0, LaurentPoly(c));
  return s;
}

/// p as above plus q in gr -3 with d(q) = p, so that D2(1) is a boundary.
inline SOComplex point_with_d2_killed(const Rational& iota_p, const Rational& c, const Rational& iota_q) {
  auto module = std::make_shared<const sogamma::BigradedModule>(
      std::vector<Generator>{{"p", -4, iota_p}, {"q", -3, iota_q}});
  SOComplex s = sogamma::make_complex("Pq", module);
  s.d2.add(0, 0, LaurentPoly(c));
  s.d.add(1, 0, LaurentPoly(1));
  return s;
}

inline LambdaMap identity(const ModulePtr& m) {
  LambdaMap id(m, m, 0);
  for (std::size_t g = 0; g < m->rank(); ++g) id.add(g, g, LaurentPoly(1));
  return id;
}

/// Random N of gr-degree 0 whose terms all strictly lower the I-level.
inline LambdaMap random_filtered_nilpotent(const ModulePtr& m, Rng& rng, int density_percent) {
  LambdaMap n(m, m, 0);
  const auto& mod = *m;
  for (std::size_t g = 0; g < mod.rank(); ++g) {
    for (std::size_t h = 0; h < mod.rank(); ++h) {
      if (g == h) continue;
      const int diff = mod[g].gr - mod[h].gr;
      if (sogamma::floor_mod(diff, 8) != 0) continue;
      const int p = diff / 8;
      if (!(mod[h].iota + Rational(p) < mod[g].iota)) continue;
      if (uniform(rng, 1, 100) > density_percent) continue;
      n.add(g, h, LaurentPoly::monomial(nonzero_coeff(rng), p));
    }
  }
  return n;
}

/// (I + N)^-1 = sum (-N)^k; N is nilpotent of index at most rank.
inline LambdaMap unipotent_inverse(const ModulePtr& m, const LambdaMap& n) {
  LambdaMap inv = identity(m);
  LambdaMap term = identity(m);
  for (std::size_t k = 0; k < m->rank(); ++k) {
    term = -sogamma::compose(n, term);
    if (term.is_zero()) break;
    inv += term;
  }
  return inv;
}

/// Change of basis by a filtered unipotent automorphism.
inline SOComplex conjugate(const SOComplex& s, const LambdaMap& n) {
  const LambdaMap phi = identity(s.module) + n;
  const LambdaMap inv = unipotent_inverse(s.module, n);
  SOComplex out = s;
  out.d = sogamma::compose(phi, sogamma::compose(s.d, inv));
  out.u = sogamma::compose(phi, sogamma::compose(s.u, inv));
  out.d1 = sogamma::compose(s.d1, inv);
  out.d2 = sogamma::compose(phi, s.d2);
  return out;
}

inline SOComplex random_regrade(const SOComplex& s, Rng& rng, int count) {
  SOComplex out = s;
  for (int k = 0; k < count; ++k)
    out = sogamma::regrade(out, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.rank()) - 1)),
                           uniform(rng, -2, 2));
  return out;
}

/// Valid complex of rank <= 12 drawn from five base families, then
/// regraded and conjugated.
inline SOComplex random_valid_complex(Rng& rng) {
  SOComplex base;
  switch (uniform(rng, 0, 4)) {
    case 0:
      base = add_acyclic_pairs(sogamma::build_y1(), rng, uniform(rng, 1, 5));
      break;
    case 1:
      base = sogamma::build_yn(2);
      break;
    case 2: {
      const Rational iota_p = sogamma::rat(-uniform(rng, 1, 119), 120);
      if (uniform(rng, 0, 1)) {
        const auto p = point_with_d2(iota_p, nonzero_coeff(rng));
        base = add_acyclic_pairs(sogamma::tensor(sogamma::build_y1(), p), rng, uniform(rng, 0, 2));
      } else {
        const Rational iota_q = iota_p + sogamma::rat(uniform(rng, 1, 240), 120);
        base = sogamma::tensor(sogamma::build_y1(), point_with_d2_killed(iota_p, nonzero_coeff(rng), iota_q));
      }
      break;
    }
    case 3: {
      const Rational iota_p = sogamma::rat(-uniform(rng, 1, 119), 120);
      const Rational iota_q = iota_p + sogamma::rat(uniform(rng, 1, 240), 120);
      base = add_acyclic_pairs(point_with_d2_killed(iota_p, nonzero_coeff(rng), iota_q), rng, uniform(rng, 0, 5));
      break;
    }
    default: {
      const auto y1 = sogamma::build_y1();
      base = add_acyclic_pairs(direct_sum(y1, random_regrade(y1, rng, 2)), rng, uniform(rng, 0, 4));
      break;
    }
  }
  base = random_regrade(base, rng, uniform(rng, 0, 4));
  return conjugate(base, random_filtered_nilpotent(base.module, rng, 40));
}

}  // namespace testsupport
