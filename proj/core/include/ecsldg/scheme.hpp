#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ecsldg {

enum class SubstepKind { Hf, HE };

/// One substep of a composed time step: run `kind` over coefficient * dt.
struct Substep {
  SubstepKind kind;
  double coefficient;
};

/// Operator-splitting scheme for one time step.
///   lie      : Hf(1) HE(1)
///   strang   : Hf(1/2) HE(1) Hf(1/2)
///   ss       : (SS(alpha))^m SS(beta) (SS(alpha))^m, alpha = 1/(2m - (2m)^(1/3)),
///              beta = 1 - 2 m alpha  (SS3 for m = 1, SS13 for m = 6)
///   ten_lie  : fourth-order ten-stage product of phi(c) = [Hf(c), HE(c)] and
///              its adjoint phi*(c) = [HE(c), Hf(c)]
struct SplittingScheme {
  enum class Kind { lie, strang, ss, ten_lie };
  Kind kind = Kind::ten_lie;
  int m = 1;  // only used by Kind::ss

  static SplittingScheme lie() { return {Kind::lie, 1}; }
  static SplittingScheme strang() { return {Kind::strang, 1}; }
  static SplittingScheme ss(int m) { return {Kind::ss, m}; }
  static SplittingScheme ten_lie() { return {Kind::ten_lie, 1}; }

  /// Canonical name: "lie", "strang", "ss3", "ss13", "10lie".
  std::string name() const;

  bool operator==(const SplittingScheme&) const = default;
};

/// Accepts the canonical names (case-insensitive) plus "tenlie", "ss2m+1"
/// style "ssN" with odd N >= 3. Throws InputError.
SplittingScheme parse_scheme(std::string_view text);

inline constexpr int max_ss_stages_m = 19;

/// Triple-jump coefficients for SS_{2m+1}.
double ss_alpha(int m);
double ss_beta(int m);

/// Coefficients a_1..a_5 of the ten-stage scheme; b_i = a_{6-i}.
const std::vector<double>& ten_lie_a();
const std::vector<double>& ten_lie_b();

/// Ordered substeps for one step. Adjacent Hf substeps are merged (free
/// transport is an exact group); HE substeps are never merged because the
/// midpoint field solve is not.
std::vector<Substep> expand_scheme(const SplittingScheme& scheme);

}  // namespace ecsldg
