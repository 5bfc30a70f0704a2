#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bcfusion/fusion.hpp"

namespace bcfusion {

/// q = exp(z pi i / l) with gcd(z, l) = 1 and 1 <= z <= l - 1.
class QuantumParams {
 public:
  QuantumParams(AlcoveParams alcove, int z);

  const AlcoveParams& alcove() const { return alcove_; }
  const RootDatum& datum() const { return alcove_.datum(); }
  int ell() const { return alcove_.ell(); }
  int z() const { return z_; }
  /// q^l = (-1)^z
  int q_ell_sign() const { return z_ % 2 == 0 ? 1 : -1; }

  /// q^(m/4), exact reduction of the exponent before evaluation.
  std::complex<double> q_power_x4(std::int64_t m) const;
  /// sin(m z pi / (4 l)); exactly 0 when m z is a multiple of 4 l.
  double sin_x4(std::int64_t m) const;

 private:
  AlcoveParams alcove_;
  int z_;
};

/// Admissible z for this l: 1 <= z <= l - 1, gcd(z, l) = 1.
std::vector<int> admissible_z(int ell);

/// [n] = sin(n z pi / l) / sin(z pi / l)
double quantum_integer(std::int64_t n, const QuantumParams& params);
/// [m / 4] in the same normalization.
double quantum_number_x4(std::int64_t m, const QuantumParams& params);

/// prod_{alpha > 0} [form(alpha, nu) / 2] for nu in the root lattice.
double weyl_denominator(const QuantumParams& params, const Weight& nu);

/// sum_w epsilon(w) q^form(w(kappa), nu)
std::complex<double> alternating_sum(const QuantumParams& params, const Weight& kappa, const Weight& nu);

/// Weyl character chi_lambda(H_nu): the alternating sum at lambda + rho over
/// the one at rho.
double chi(const QuantumParams& params, const Weight& lambda, const Weight& nu);

/// prod_{alpha > 0} [form(mu + rho, alpha)] / [form(rho, alpha)]
double qdim(const QuantumParams& params, const Weight& mu);

/// chi_lambda(H_{mu + rho}) for half-integral dominant mu (type B).
double dim_mu(const QuantumParams& params, const Weight& mu, const Weight& lambda);

struct CharacterVector {
  std::vector<Weight> labels;
  std::vector<double> values;

  double at(const Weight& label) const;
};

/// qdim over the alcove.
CharacterVector qdim_vector(const QuantumParams& params, const std::vector<Weight>& labels);
/// dim^mu over the alcove.
CharacterVector dim_mu_vector(const QuantumParams& params, const Weight& mu, const std::vector<Weight>& labels);

/// Dim(lambda) = prod over positive coroots of
/// sin(form(lambda + rho, coroot) pi / l) / sin(form(rho, coroot) pi / l).
CharacterVector positive_character(const AlcoveParams& alcove);

/// max over label pairs of |f(a) f(b) - sum_c N_ab^c f(c)| / (1 + |f(a) f(b)|)
double character_law_residual(const FusionTable& table, const CharacterVector& f);

struct PfCertificate {
  int s = 0;
  int positive_count = 0;
  double eigenvalue = 0.0;
  /// The positive eigenvector scaled to 1 at the unit label.
  std::vector<double> eigenvector;
};

/// Finds the smallest odd s with M = N^s + N^{s+1} entrywise positive for the
/// generator (Lambda_k for B, Lambda_1 for C), diagonalizes M and counts the
/// eigenvectors whose entries all share one sign. Throws
/// CertificationFailure when no such s exists below 2 |C_l| or when the count
/// is not exactly one.
PfCertificate pf_certify_unique(const FusionTable& table);

/// 2 c_lambda = 2 form(lambda + 2 rho, lambda); the twist is q^{c_lambda}.
std::int64_t twist_exponent_doubled(const RootDatum& datum, const Weight& lambda);

}  // namespace bcfusion
