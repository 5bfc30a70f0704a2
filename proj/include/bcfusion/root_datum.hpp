#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "bcfusion/weight.hpp"

namespace bcfusion {

using Rational = boost::rational<std::int64_t>;

enum class Family { B, C };

char family_letter(Family f);
Family parse_family(const std::string& text);

/// Element of the hyperoctahedral group S_k x| (Z_2)^k acting by
/// (w x)_i = signs[i] * x[permutation[i]].
class WeylElement {
 public:
  explicit WeylElement(int rank);
  WeylElement(std::vector<int> permutation, std::vector<int> signs);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& permutation() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  /// epsilon(w) = sign(permutation) * prod(signs).
  int signature() const;

  Weight apply(const Weight& x) const;
  std::vector<int> apply(const std::vector<int>& doubled) const;

  /// (*this) o other
  WeylElement compose(const WeylElement& other) const;
  WeylElement inverse() const;

  /// Coordinate reversal (mu_1..mu_k) -> (mu_k..mu_1).
  static WeylElement reversal(int rank);
  /// All 2^k k! elements in a fixed order.
  static std::vector<WeylElement> enumerate(int rank);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// Root system of type B_k or C_r, normalized so short roots have
/// form(alpha, alpha) = 2. For B that form is twice the dot product.
class RootDatum {
 public:
  RootDatum(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int form_scale() const { return form_scale_; }

  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Coroots 2 alpha / form(alpha, alpha) as doubled vectors. Long-root
  /// coroots of B_k are half-integral in only two coordinates, so they are
  /// not Weights.
  const std::vector<std::vector<int>>& positive_coroots() const { return positive_coroots_; }
  const Weight& rho() const { return rho_; }
  /// Highest short root (l is odd, so coprime to the root-length ratio 2).
  const Weight& theta() const { return theta_; }
  const Weight& theta_check() const { return theta_check_; }

  /// Exact 4 * form(a, b).
  std::int64_t form_x4(const Weight& a, const Weight& b) const;
  Rational form(const Weight& a, const Weight& b) const;
  /// Exact 4 * form(a, coroot) for a doubled coroot vector.
  std::int64_t pairing_x4(const Weight& a, const std::vector<int>& coroot) const;
  /// form(a, theta_check); always an integer on the weight lattice.
  std::int64_t pairing_theta_check(const Weight& a) const;

  /// Fundamental weight Lambda_i, 1-based.
  Weight fundamental_weight(int i) const;

  /// Coefficients of x in the simple-root basis, or nullopt when x is not
  /// in the root lattice Q.
  std::optional<std::vector<std::int64_t>> simple_root_coordinates(const Weight& x) const;
  bool in_root_lattice(const Weight& x) const { return simple_root_coordinates(x).has_value(); }

  /// True when x lies in the weight lattice of this family.
  bool in_weight_lattice(const Weight& x) const;

 private:
  Family family_;
  int rank_;
  int form_scale_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<int>> positive_coroots_;
  Weight rho_;
  Weight theta_;
  Weight theta_check_;
};

RootDatum make_root_datum(Family family, int rank);

struct DominantReduction {
  WeylElement w;
  Weight dominant;
};

/// Canonical dominant representative x_dom = w(x). Negative entries are
/// flipped, then absolute values are stably sorted in descending order.
DominantReduction dominant_reduce(const RootDatum& datum, const Weight& x);

using WeightMultiset = std::map<Weight, int>;

/// Multiplicities of the dominant weights of V_lambda (Freudenthal).
WeightMultiset dominant_weight_multiplicities(const RootDatum& datum, const Weight& lambda);

/// Every weight of V_lambda with its multiplicity, all Weyl images included.
WeightMultiset weight_multiplicities(const RootDatum& datum, const Weight& lambda);

/// Distinct Weyl images of a weight.
std::vector<Weight> weyl_orbit(const Weight& x);

/// prod_{alpha > 0} form(lambda + rho, alpha) / form(rho, alpha).
std::int64_t weyl_dimension(const RootDatum& datum, const Weight& lambda);

}  // namespace bcfusion
