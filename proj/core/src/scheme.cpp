#include "ecsldg/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "ecsldg/error.hpp"

namespace ecsldg {

std::string SplittingScheme::name() const {
  switch (kind) {
    case Kind::lie: return "lie";
    case Kind::strang: return "strang";
    case Kind::ss: return "ss" + std::to_string(2 * m + 1);
    case Kind::ten_lie: return "10lie";
  }
  return "?";
}

SplittingScheme parse_scheme(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "lie") return SplittingScheme::lie();
  if (s == "strang" || s == "ss") return SplittingScheme::strang();
  if (s == "10lie" || s == "tenlie" || s == "ten_lie") return SplittingScheme::ten_lie();
  if (s.size() > 2 && s.rfind("ss", 0) == 0) {
    const std::string digits = s.substr(2);
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const int stages = std::stoi(digits);
      if (stages % 2 == 1 && stages >= 3) {
        const int m = (stages - 1) / 2;
        if (m > max_ss_stages_m) {
          throw InputError("scheme '" + std::string(text) + "': m = " + std::to_string(m) +
                           " exceeds " + std::to_string(max_ss_stages_m));
        }
        return SplittingScheme::ss(m);
      }
    }
  }
  throw InputError("unknown splitting scheme '" + std::string(text) + "'");
}

double ss_alpha(int m) {
  if (m < 1 || m > max_ss_stages_m) throw InputError("SS_{2m+1}: m out of range [1, 19]");
  const double two_m = 2.0 * m;
  return 1.0 / (two_m - std::cbrt(two_m));
}

double ss_beta(int m) { return 1.0 - 2.0 * m * ss_alpha(m); }

const std::vector<double>& ten_lie_a() {
  static const std::vector<double> a = [] {
    const double r = std::sqrt(19.0);
    return std::vector<double>{(146.0 + 5.0 * r) / 540.0, (-2.0 + 10.0 * r) / 135.0, 1.0 / 5.0,
                               (-23.0 - 20.0 * r) / 270.0, (14.0 - r) / 108.0};
  }();
  return a;
}

const std::vector<double>& ten_lie_b() {
  static const std::vector<double> b = [] {
    std::vector<double> a = ten_lie_a();
    std::reverse(a.begin(), a.end());
    return a;
  }();
  return b;
}

namespace {

void push(std::vector<Substep>& out, SubstepKind kind, double c) {
  if (kind == SubstepKind::Hf && !out.empty() && out.back().kind == SubstepKind::Hf) {
    out.back().coefficient += c;
    return;
  }
  out.push_back({kind, c});
}

void push_strang(std::vector<Substep>& out, double c) {
  push(out, SubstepKind::Hf, 0.5 * c);
  push(out, SubstepKind::HE, c);
  push(out, SubstepKind::Hf, 0.5 * c);
}

}  // namespace

std::vector<Substep> expand_scheme(const SplittingScheme& scheme) {
  std::vector<Substep> out;
  switch (scheme.kind) {
    case SplittingScheme::Kind::lie:
      push(out, SubstepKind::Hf, 1.0);
      push(out, SubstepKind::HE, 1.0);
      break;
    case SplittingScheme::Kind::strang:
      push_strang(out, 1.0);
      break;
    case SplittingScheme::Kind::ss: {
      const double alpha = ss_alpha(scheme.m);
      const double beta = ss_beta(scheme.m);
      for (int r = 0; r < scheme.m; ++r) push_strang(out, alpha);
      push_strang(out, beta);
      for (int r = 0; r < scheme.m; ++r) push_strang(out, alpha);
      break;
    }
    case SplittingScheme::Kind::ten_lie: {
      // Rightmost factor acts first: phi*(b1), phi(a1), phi*(b2), ..., phi(a5).
      const auto& a = ten_lie_a();
      const auto& b = ten_lie_b();
      for (int i = 0; i < 5; ++i) {
        push(out, SubstepKind::HE, b[i]);
        push(out, SubstepKind::Hf, b[i]);
        push(out, SubstepKind::Hf, a[i]);
        push(out, SubstepKind::HE, a[i]);
      }
      break;
    }
  }
  return out;
}

}  // namespace ecsldg
