#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "ecsldg/error.hpp"
#include "ecsldg/scheme.hpp"

using namespace ecsldg;

namespace {

using Mat = std::array<double, 9>;

Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i * 3 + j] += a[i * 3 + k] * b[k * 3 + j];
  return c;
}

Mat scaled(const Mat& a, double s) {
  Mat c = a;
  for (double& x : c) x *= s;
  return c;
}

Mat identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

// Taylor series with scaling and squaring; ample for the small norms used here.
Mat expm(const Mat& a) {
  const Mat s = scaled(a, 1.0 / 1024.0);
  Mat term = identity(), sum = identity();
  for (int n = 1; n < 20; ++n) {
    term = scaled(mul(term, s), 1.0 / n);
    for (int i = 0; i < 9; ++i) sum[i] += term[i];
  }
  for (int i = 0; i < 10; ++i) sum = mul(sum, sum);
  return sum;
}

double local_error(const SplittingScheme& scheme, double h) {
  const Mat A{0.0, 1.0, 0.0, -1.0, 0.0, 0.5, 0.2, 0.0, -0.3};
  const Mat B{0.4, 0.0, -1.0, 0.0, -0.2, 0.0, 1.0, 0.7, 0.0};
  Mat prod = identity();
  for (const Substep& s : expand_scheme(scheme)) {
    prod = mul(expm(scaled(s.kind == SubstepKind::Hf ? A : B, s.coefficient * h)), prod);
  }
  Mat sum{};
  for (int i = 0; i < 9; ++i) sum[i] = (A[i] + B[i]) * h;
  const Mat exact = expm(sum);
  double e = 0.0;
  for (int i = 0; i < 9; ++i) e = std::max(e, std::abs(prod[i] - exact[i]));
  return e;
}

}  // namespace

TEST_CASE("names round trip through the parser") {
  for (const auto& s : {SplittingScheme::lie(), SplittingScheme::strang(), SplittingScheme::ss(1), SplittingScheme::ss(6),
                        SplittingScheme::ten_lie()}) {
    CHECK(parse_scheme(s.name()) == s);
  }
  CHECK(SplittingScheme::ss(1).name() == "ss3");
  CHECK(SplittingScheme::ss(6).name() == "ss13");
  CHECK(SplittingScheme::ten_lie().name() == "10lie");
  CHECK(parse_scheme("TenLie") == SplittingScheme::ten_lie());
  CHECK(parse_scheme("STRANG") == SplittingScheme::strang());
  CHECK(parse_scheme("ss5") == SplittingScheme::ss(2));
  CHECK_THROWS_AS(parse_scheme("ss4"), InputError);
  CHECK_THROWS_AS(parse_scheme("ss1"), InputError);
  CHECK_THROWS_AS(parse_scheme("ss41"), InputError);
  CHECK_THROWS_AS(parse_scheme("yoshida"), InputError);
  CHECK_THROWS_AS(parse_scheme(""), InputError);
}

TEST_CASE("triple-jump coefficients") {
  CHECK(std::abs(ss_alpha(1) - 1.0 / (2.0 - std::cbrt(2.0))) < 1e-15);
  CHECK(std::abs(ss_beta(1) - (1.0 - 2.0 / (2.0 - std::cbrt(2.0)))) < 1e-15);
  for (int m = 1; m <= max_ss_stages_m; ++m) {
    CHECK(std::abs(2 * m * ss_alpha(m) + ss_beta(m) - 1.0) < 1e-15);
    // Fourth-order condition: 2m alpha^3 + beta^3 = 0.
    CHECK(std::abs(2 * m * std::pow(ss_alpha(m), 3) + std::pow(ss_beta(m), 3)) < 1e-14);
  }
  CHECK_THROWS_AS(ss_alpha(0), InputError);
  CHECK_THROWS_AS(ss_alpha(max_ss_stages_m + 1), InputError);
}

TEST_CASE("ten-stage coefficients") {
  const auto& a = ten_lie_a();
  const auto& b = ten_lie_b();
  REQUIRE(a.size() == 5);
  REQUIRE(b.size() == 5);
  double sa = 0.0;
  for (int i = 0; i < 5; ++i) {
    CHECK(b[i] == a[4 - i]);
    sa += a[i];
  }
  CHECK(std::abs(sa - 0.5) < 1e-15);
}

TEST_CASE("expanded substeps") {
  const auto lie = expand_scheme(SplittingScheme::lie());
  REQUIRE(lie.size() == 2);
  CHECK(lie[0].kind == SubstepKind::Hf);
  CHECK(lie[1].kind == SubstepKind::HE);

  const auto strang = expand_scheme(SplittingScheme::strang());
  REQUIRE(strang.size() == 3);
  CHECK(strang[0].kind == SubstepKind::Hf);
  CHECK(strang[0].coefficient == 0.5);
  CHECK(strang[1].kind == SubstepKind::HE);
  CHECK(strang[1].coefficient == 1.0);
  CHECK(strang[2].coefficient == 0.5);

  for (const auto& s : {SplittingScheme::lie(), SplittingScheme::strang(), SplittingScheme::ss(1), SplittingScheme::ss(6),
                        SplittingScheme::ten_lie()}) {
    const auto subs = expand_scheme(s);
    double hf = 0.0, he = 0.0;
    int n_he = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i].kind == SubstepKind::Hf) {
        hf += subs[i].coefficient;
        if (i > 0) CHECK(subs[i - 1].kind != SubstepKind::Hf);
      } else {
        he += subs[i].coefficient;
        ++n_he;
      }
    }
    CHECK(std::abs(hf - 1.0) < 1e-14);
    CHECK(std::abs(he - 1.0) < 1e-14);
    if (s.kind == SplittingScheme::Kind::ten_lie) CHECK(n_he == 10);
  }
}

TEST_CASE("local error orders on a non-commuting linear system") {
  const struct {
    SplittingScheme scheme;
    int order;
  } cases[] = {{SplittingScheme::lie(), 1},
               {SplittingScheme::strang(), 2},
               {SplittingScheme::ss(1), 4},
               {SplittingScheme::ss(6), 4},
               {SplittingScheme::ten_lie(), 4}};
  for (const auto& c : cases) {
    const double e1 = local_error(c.scheme, 0.1);
    const double e2 = local_error(c.scheme, 0.05);
    const double observed = std::log2(e1 / e2);
    CAPTURE(c.scheme.name());
    CHECK(observed == doctest::Approx(c.order + 1).epsilon(0.1));
  }
}
