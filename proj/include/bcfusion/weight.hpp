#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bcfusion {

/// A weight in R^k stored as twice its coordinates.
///
/// Spin weights of so(2k+1) have half-integer coordinates; storing 2*lambda
/// keeps every wall test an integer comparison. All doubled entries share
/// one parity: even for integral weights, odd for the spin coset.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> doubled);

  static Weight zero(int rank);
  /// Builds an integral weight from ordinary integer coordinates.
  static Weight from_integers(const std::vector<int>& coords);

  int rank() const { return static_cast<int>(doubled_.size()); }
  const std::vector<int>& doubled() const { return doubled_; }
  int doubled_at(int i) const { return doubled_[static_cast<std::size_t>(i)]; }

  bool is_integral() const;
  /// p(lambda): +1 on Z^k, -1 on the spin coset.
  int parity() const { return is_integral() ? 1 : -1; }
  bool is_zero() const;
  /// Weakly decreasing with nonnegative entries.
  bool is_dominant() const;

  std::int64_t doubled_sum() const;
  /// Squared Euclidean norm of the doubled vector, i.e. 4|lambda|^2.
  std::int64_t doubled_norm_sq() const;
  double norm() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int c, const Weight& w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "(3/2,1/2)"
  std::string to_string() const;

 private:
  std::vector<int> doubled_;
};

std::int64_t dot_doubled(const std::vector<int>& a, const std::vector<int>& b);
inline std::int64_t dot_doubled(const Weight& a, const Weight& b) {
  return dot_doubled(a.doubled(), b.doubled());
}

/// Graded lexicographic order on doubled coordinates: coordinate sum first,
/// then lexicographic. Every label list and matrix uses this order.
struct GradedLess {
  bool operator()(const Weight& a, const Weight& b) const;
};

}  // namespace bcfusion
