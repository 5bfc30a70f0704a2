#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcfusion/fusion.hpp"
#include "bcfusion/qchar.hpp"

namespace bcfusion {

/// Young diagram given by its row lengths.
class FerrersDiagram {
 public:
  FerrersDiagram() = default;
  /// Rows must be weakly decreasing; trailing zeros are dropped.
  explicit FerrersDiagram(std::vector<int> rows);
  static FerrersDiagram from_columns(const std::vector<int>& columns);

  const std::vector<int>& rows() const { return rows_; }
  std::vector<int> columns() const;
  /// lambda_i' (1-based), 0 past the last column.
  int column(int i) const;
  int row(int i) const;
  int size() const;  // |lambda|
  FerrersDiagram transpose() const;
  std::string to_string() const;  // "[2,1]"

  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;
  friend auto operator<=>(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// lambda_1' + lambda_2' <= 2k + 1 and lambda_1 <= (l - 2k - 1) / 2.
bool in_gamma(int k, int ell, const FerrersDiagram& lambda);
/// Gamma(k, l) ordered by (|lambda|, rows lexicographically).
std::vector<FerrersDiagram> gamma_set(int k, int ell);

/// First column cut to min(2k + 1 - lambda_1', lambda_1'), read as a k-tuple.
Weight bar_map(int k, const FerrersDiagram& lambda);
/// bar(lambda) for even |lambda|, phi(bar(lambda)) for odd |lambda|.
Weight psi(int k, int ell, const FerrersDiagram& lambda);
/// Diagrams of Gamma(k, l) one box away from lambda.
std::vector<FerrersDiagram> box_neighbors(int k, int ell, const FerrersDiagram& lambda);

/// Adjacency of the box rule on gamma_set(k, l).
IntMatrix box_graph(int k, int ell);

/// phi(Lambda_1), the label of V.
Weight v_label(const AlcoveParams& params);

/// For all lambda, mu in Gamma: mu is a box neighbor of lambda iff
/// N_{V psi(lambda)}^{psi(mu)} = 1, and every such coefficient is 0 or 1.
bool verify_psi_fusion(const FusionTable& table, int k, int ell);

/// Whether psi maps Gamma(k, l) bijectively onto the table labels.
bool psi_is_bijection(const FusionTable& table, int k, int ell);

/// Path counts agree per label under psi and in total for 0..max_n.
bool verify_bratteli(const FusionTable& table, int k, int ell, int max_n);

struct BmwParams {
  std::complex<double> q;
  std::complex<double> r;

  /// Rejects q^2 = -1 and r = +-q^{+-1}.
  BmwParams(std::complex<double> q, std::complex<double> r);
  /// q_bmw = -q^2 and r = -q_bmw^{2k} from the quantum group parameter.
  static BmwParams from_quantum(const QuantumParams& params);
};

/// r (q - 1/q) / (r - 1/r + q - 1/q)
std::complex<double> bmw_trace_g(const BmwParams& params);

/// (q^n - q^-n) / (q - 1/q) for a complex q.
std::complex<double> quantum_integer_at(std::int64_t n, std::complex<double> q);

struct EigenSquare {
  std::int64_t exponent_doubled;  // 2 (c_nu - c_lambda - c_mu)
  std::complex<double> value;
};

/// q^{c_nu - c_lambda - c_mu}; throws DomainError when N_{lambda mu}^nu = 0.
EigenSquare braiding_eig_sq(const QuantumParams& params, const Weight& lambda, const Weight& mu, const Weight& nu);

/// (c3^2 + c1 c2 - c3 (c1 + c2)) / (c3 (1/c1 + 1/c2))
std::complex<double> dim_from_eigs(std::complex<double> c1, std::complex<double> c2, std::complex<double> c3);

struct EigenSquareCheck {
  /// Squares on unit, (2,0,...,0) and (1,1,0,...,0), in that order.
  std::vector<std::complex<double>> computed;
  /// sigma q^{-8k}, sigma q^{4}, sigma q^{-4}; sigma = -1 iff k odd and q^l = -1.
  std::vector<std::complex<double>> expected;
  bool set_equal = false;
  /// Whether (2,0,...) carries the q^{-4} square rather than q^4.
  bool alternate_labeling = false;
};

EigenSquareCheck check_eigen_squares(const QuantumParams& params);

struct TraceCheck {
  int choices_tried = 0;
  int matching_choices = 0;
  double best_residual = 0.0;
};

/// Compares sum_nu qdim(nu) c_nu / qdim(V)^2 with the BMW value of tr(g) for
/// the square roots c_nu of the eigenvalue squares, unit sign fixed. Each
/// choice is rescaled so that c_{V1} c_{V2} = -1, which reads off q_bmw and r.
TraceCheck check_bmw_trace(const QuantumParams& params);

struct DimensionIdentities {
  double vdim_residual = 0.0;       // | |qdim(V)| - |[4k]/[2] + 1| |
  double eigs_residual = 0.0;       // | |dim_from_eigs| - |[-2k]~/[1]~ + 1| |
  double reparam_residual = 0.0;    // | [2k]~/[1]~ + [4k]/[2] |
};

DimensionIdentities check_dimension_identities(const QuantumParams& params);

struct RankLevelReport {
  int k = 0;
  int ell = 0;
  int r = 0;
  std::size_t gamma_size = 0;
  std::size_t c_alcove_size = 0;
  bool cardinalities_equal = false;
  bool transpose_is_graph_iso = false;
  bool fallback_ran = false;
  bool fallback_iso = false;
  bool ok() const { return cardinalities_equal && (transpose_is_graph_iso || fallback_iso); }
};

/// Compares Gamma(k, l) under the box rule with the C_r alcove at level l,
/// r = (l - 2k - 1) / 2, under the vector generator.
RankLevelReport ranklevel_check(int k, int ell);

nlohmann::json to_json(const RankLevelReport& report);

/// Full duality report for B_k at level l (psi table, graph checks, and
/// rank-level data when r >= 2).
nlohmann::json duality_report(int k, int ell);

}  // namespace bcfusion
