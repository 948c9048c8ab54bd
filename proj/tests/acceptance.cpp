// One line per acceptance criterion; exit status is nonzero if any fails.
// All comparisons are exact rational equality.
// Pass --extended to also run the n = 5 part of AC2.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "sogamma/charvar.hpp"
#include "sogamma/gamma.hpp"
#include "sogamma/socx.hpp"
#include "support/random_complex.hpp"

using namespace sogamma;

namespace {

constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Seconds = 60.0;
constexpr double kAc2ExtendedSeconds = 600.0;
constexpr double kAc7Seconds = 30.0;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) note << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GammaValue closed_form(int n, int i) {
  if (i <= 0) return GammaValue::finite(Rational(0));
  if (i <= n) return GammaValue::finite(rat(i, 120));
  if (i <= 2 * n) return GammaValue::finite(rat(n, 120) + Rational(i - n) * rat(2, 5));
  return GammaValue::infinity();
}

void yn_exactness(Outcome& o, int n) {
  const auto y = build_yn(n);
  const auto t = gamma_table(y, -4, 2 * n + 2);
  for (const auto& r : t.rows) {
    o.require(r.value == closed_form(n, r.i),
              "n=" + std::to_string(n) + " i=" + std::to_string(r.i) + " got " + r.value.str());
    if (r.witness) o.require(check_witness(y, r).empty(), "witness n=" + std::to_string(n) + " i=" + std::to_string(r.i));
  }
}

void ac1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto t = gamma_table(build_y1(), 0, 3);
  const char* expected[] = {"0", "1/120", "49/120", "inf"};
  for (std::size_t k = 0; k < 4; ++k)
    o.require(t.rows[k].value.str() == expected[k], "i=" + std::to_string(k) + " got " + t.rows[k].value.str());
  const double s = seconds_since(t0);
  o.require(s < kAc1Seconds, "runtime");
  o.note << "runtime " << s << " s";
}

void ac2(Outcome& o, bool extended) {
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 4; ++n) yn_exactness(o, n);
  const double s = seconds_since(t0);
  o.require(s < kAc2Seconds, "runtime n<=4");
  o.note << "n<=4 runtime " << s << " s";
  if (extended) {
    t0 = std::chrono::steady_clock::now();
    yn_exactness(o, 5);
    const double s5 = seconds_since(t0);
    o.require(s5 < kAc2ExtendedSeconds, "runtime n=5");
    o.note << ", n=5 runtime " << s5 << " s";
  } else {
    o.note << ", n=5 not requested";
  }
}

void ac3(Outcome& o) {
  for (int n = 1; n <= 5; ++n) {
    const auto y = build_yn(n);
    const auto r = validate(y);
    o.require(r.ok, "validate n=" + std::to_string(n) + ": " + r.str());
    const auto t = assemble_tilde(y);
    o.require(compose(t.dtilde, t.dtilde).is_zero(), "dtilde^2 n=" + std::to_string(n));
    o.require(compose(t.chi, t.chi).is_zero(), "chi^2 n=" + std::to_string(n));
    o.require((compose(t.dtilde, t.chi) + compose(t.chi, t.dtilde)).is_zero(), "anticommute n=" + std::to_string(n));
  }
  o.note << "n = 1..5";
}

void ac4(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const auto y = build_yn(n);
    for (int i = 1; i <= 2 * n; ++i)
      o.require(gamma(y, i).value == gamma_oracle(y, i).value, "Y_" + std::to_string(n) + " i=" + std::to_string(i));
  }
  testsupport::Rng rng(20240611);
  int finite = 0;
  for (int t = 0; t < 50; ++t) {
    const auto s = testsupport::random_valid_complex(rng);
    o.require(s.rank() <= 12, "rank bound");
    const int i = testsupport::uniform(rng, 1, 6);
    const auto fast = gamma(s, i);
    o.require(fast.value == gamma_oracle(s, i).value, "random sample " + std::to_string(t));
    if (!fast.value.is_infinite()) ++finite;
  }
  o.note << "50 random complexes, " << finite << " finite values";
}

void ac5(Outcome& o) {
  const auto y1 = build_y1();
  auto check = [&](const SOComplex& a, const SOComplex& b) {
    const auto p = tensor(a, b);
    o.require(2 * p.rank() + 1 == (2 * a.rank() + 1) * (2 * b.rank() + 1), a.name + " x " + b.name);
    return p;
  };
  const std::size_t expected[] = {2, 12, 62, 312, 1562};
  SOComplex y = y1;
  std::ostringstream seq;
  seq << y.rank();
  o.require(y.rank() == expected[0], "r(1)");
  for (int n = 2; n <= 5; ++n) {
    y = check(y1, y);
    o.require(y.rank() == expected[n - 1], "r(" + std::to_string(n) + ")");
    seq << "," << y.rank();
  }
  check(y1, testsupport::point_with_d2(rat(-1, 3), Rational(2)));
  o.note << "r(n) = " << seq.str();
}

void ac6(Outcome& o) {
  std::size_t checked = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto y = build_yn(n);
    for (const auto& sg : special_generators(y)) {
      const auto& g = (*y.module)[sg.index];
      o.require(g.gr == 4 * sg.a + 8 * sg.b - 3, "gr of " + g.id);
      for (int m = -3; m <= 3; ++m) {
        const int i = sg.a + 2 * sg.b + 2 * m;
        const Rational shifted = g.iota + Rational(m);
        o.require(g.gr + 8 * m == 4 * i - 3, "renormalized gr of " + g.id);
        o.require(shifted == rat(i, 2) - rat(59L * sg.a, 120) - rat(71L * sg.b, 120), "iota of " + g.id);
      }
      ++checked;
    }
  }
  o.require(checked > 0, "no special generators found");
  o.note << checked << " special generators";
}

void ac7(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 12; ++n) {
    const auto c = charvar::enumerate_components(n);
    std::uint64_t sum = 0;
    for (int i = 0; i <= n; ++i) {
      const auto got = c.by_irreducible[static_cast<std::size_t>(i)];
      o.require(got == charvar::expected_count(n, i), "census n=" + std::to_string(n) + " i=" + std::to_string(i));
      sum += got;
    }
    std::uint64_t p3 = 1;
    for (int k = 0; k < n; ++k) p3 *= 3;
    o.require(sum == p3 && c.total == p3, "total n=" + std::to_string(n));
    const auto s = charvar::find_extension_components(n);
    o.require(s.found.size() == 1 && s.found[0].l == 0 && s.found[0].signature.betas() == n &&
                  static_cast<int>(s.found[0].signature.sigma.size()) == n,
              "extension n=" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  o.require(s < kAc7Seconds, "runtime");
  o.note << "n = 1..12, runtime " << s << " s";
}

void ac8(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    charvar::ComponentSignature beta;
    beta.sigma.assign(static_cast<std::size_t>(n), charvar::Rep::beta);
    const auto lifted = charvar::lift(beta, 0);
    const auto g = gamma(build_yn(n), 2 * n).value;
    o.require(lifted.cs_lift == rat(49L * n, 120), "cs_lift n=" + std::to_string(n));
    o.require(!g.is_infinite() && g.value() == lifted.cs_lift, "Gamma(2n) n=" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n) {
    charvar::ComponentSignature beta;
    beta.sigma.assign(static_cast<std::size_t>(n), charvar::Rep::beta);
    o.require(charvar::component_data(beta).dim_R == 3 * n, "dim_R n=" + std::to_string(n));
    for (int b1 = 0; b1 <= 3; ++b1) {
      const auto h = charvar::handle_bounds(n, b1);
      o.require(h.min_1handles == n + b1 && h.min_2handles == n && h.min_23handles == n + b1,
                "bounds n=" + std::to_string(n) + " b1=" + std::to_string(b1));
    }
  }
  o.note << "n <= 4 Gamma, n <= 12 x b1 <= 3 bounds";
}

void ac9(Outcome& o) {
  const auto y2 = build_yn(2);
  const auto base = gamma_table(y2, -3, 6);
  testsupport::Rng rng(909);
  for (int t = 0; t < 20; ++t) {
    const auto s = testsupport::random_regrade(y2, rng, 1 + t % 4);
    const auto table = gamma_table(s, -3, 6);
    for (std::size_t k = 0; k < base.rows.size(); ++k)
      o.require(table.rows[k].value == base.rows[k].value, "regrading " + std::to_string(t));
  }
  for (int k = 1; k <= 8; ++k) {
    o.require(fk(k, kAlpha).is_zero() == (k % 2 == 0), "F_" + std::to_string(k) + "(α)");
    o.require(fk(k, kBeta).is_zero() == (k % 2 == 1), "F_" + std::to_string(k) + "(β)");
  }
  o.note << "20 regradings, F_k for k <= 8";
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int a = 1; a < argc; ++a)
    if (std::strcmp(argv[a], "--extended") == 0) extended = true;

  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"AC1", ac1}, {"AC2", [extended](Outcome& o) { ac2(o, extended); }},
      {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8},
      {"AC9", ac9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::cout << name << " " << (o.pass ? "PASS" : "FAIL") << "  " << o.note.str() << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
