#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Core>
#include "json.hpp"

#include "bcfusion/root_datum.hpp"
#include "bcfusion/weight.hpp"

namespace bcfusion {

/// Whether to insist on rho + Lambda_1 lying in the alcove. The relaxed mode
/// only requires Lambda_1 itself to be a label; it is what the rank-level
/// dual side and the smallest BMW instances need.
enum class Nondegeneracy { kRequired, kRelaxed };

class AlcoveParams {
 public:
  AlcoveParams(RootDatum datum, int ell, Nondegeneracy mode = Nondegeneracy::kRequired);

  const RootDatum& datum() const { return datum_; }
  int ell() const { return ell_; }
  int rank() const { return datum_.rank(); }
  Family family() const { return datum_.family(); }

  /// form(mu + rho, theta_check)
  std::int64_t level_of(const Weight& mu) const;
  bool contains(const Weight& mu) const;
  bool in_closure(const Weight& mu) const;

 private:
  RootDatum datum_;
  int ell_;
};

/// Labels of C_l in graded lexicographic order.
std::vector<Weight> alcove_enumerate(const AlcoveParams& params);

struct AffineReduction {
  Weight label;  // meaningful only when sign != 0
  int sign = 0;
};

/// Finds w in the affine Weyl group with w . xi in C_l (dot action) and
/// returns (w . xi, epsilon(w)); sign 0 when xi + rho is fixed by a reflection.
AffineReduction affine_reduce(const AlcoveParams& params, const Weight& xi);

using Decomposition = std::map<Weight, int>;

/// Classical tensor product multiplicities m_{lambda mu}^nu (Racah-Speiser).
Decomposition classical_tensor(const RootDatum& datum, const Weight& lambda, const Weight& mu);

/// Truncated tensor product N_{lambda mu}^nu: one Racah-Speiser pass over
/// the weights of the smaller factor with affine reduction.
Decomposition fuse(const AlcoveParams& params, const Weight& lambda, const Weight& mu);

/// Same as fuse() but reuses a precomputed weight multiset of lambda.
Decomposition fuse_with_weights(const AlcoveParams& params, const WeightMultiset& lambda_weights,
                                const Weight& mu);

class FusionTable {
 public:
  FusionTable(AlcoveParams params, std::vector<Weight> labels, std::vector<int> coefficients);

  /// Computes every N_{lambda mu}^nu over the alcove.
  static FusionTable build(const AlcoveParams& params);

  const AlcoveParams& params() const { return params_; }
  const std::vector<Weight>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  int operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return coeffs_[(i * labels_.size() + j) * labels_.size() + k];
  }
  int coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const;

  std::optional<std::size_t> index_of(const Weight& w) const;
  std::size_t require_index(const Weight& w) const;
  std::size_t unit_index() const { return require_index(Weight::zero(params_.rank())); }

 private:
  AlcoveParams params_;
  std::vector<Weight> labels_;
  std::map<Weight, std::size_t> index_;
  std::vector<int> coeffs_;
};

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// (N_lambda)_{kj} = N_{lambda j}^k
IntMatrix fusion_matrix(const FusionTable& table, const Weight& lambda);

struct PathCounts {
  std::vector<std::int64_t> counts;  // indexed like the graph vertices
  std::int64_t total = 0;            // sum of squared counts
};

/// Length-n walks from `start` in a weighted graph.
PathCounts bratteli_paths(const IntMatrix& adjacency, std::size_t start, int n);
PathCounts bratteli_endo_dim(const FusionTable& table, const Weight& generator, int n);

struct TableAudit {
  bool unit = false;
  bool symmetric = false;
  bool associative = false;
  bool graded = false;
  bool nonnegative = false;
  bool ok() const { return unit && symmetric && associative && graded && nonnegative; }
};

TableAudit audit_table(const FusionTable& table);

/// Lambda_k (x) lambda = sum of lambda + w(Lambda_k) inside the alcove, each once.
bool check_spin_rule(const FusionTable& table);
/// Lambda_1 (x) mu for integral mu: mu +- eps_i, plus (type B) mu itself iff mu_k > 0.
bool check_vector_rule(const FusionTable& table);

/// Smallest odd s with N^s + N^{s+1} entrywise positive, searched below `cap`.
std::optional<int> generation_exponent(const FusionTable& table, const Weight& generator, int cap);

nlohmann::json to_json(const FusionTable& table);
FusionTable fusion_table_from_json(const nlohmann::json& j);

}  // namespace bcfusion
