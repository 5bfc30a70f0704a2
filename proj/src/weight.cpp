#include "bcfusion/weight.hpp"

#include <cmath>
#include <sstream>

#include "bcfusion/errors.hpp"

namespace bcfusion {

Weight::Weight(std::vector<int> doubled) : doubled_(std::move(doubled)) {
  if (doubled_.empty()) return;
  const bool odd = (doubled_.front() & 1) != 0;
  for (int d : doubled_) {
    if (((d & 1) != 0) != odd) {
      throw DomainError("weight mixes integer and half-integer coordinates");
    }
  }
}

Weight Weight::zero(int rank) {
  return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0));
}

Weight Weight::from_integers(const std::vector<int>& coords) {
  std::vector<int> d;
  d.reserve(coords.size());
  for (int c : coords) d.push_back(2 * c);
  return Weight(std::move(d));
}

bool Weight::is_integral() const {
  return doubled_.empty() || (doubled_.front() & 1) == 0;
}

bool Weight::is_zero() const {
  for (int d : doubled_) {
    if (d != 0) return false;
  }
  return true;
}

bool Weight::is_dominant() const {
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (doubled_[i] < 0) return false;
    if (i + 1 < doubled_.size() && doubled_[i] < doubled_[i + 1]) return false;
  }
  return true;
}

std::int64_t Weight::doubled_sum() const {
  std::int64_t s = 0;
  for (int d : doubled_) s += d;
  return s;
}

std::int64_t Weight::doubled_norm_sq() const { return dot_doubled(doubled_, doubled_); }

double Weight::norm() const { return 0.5 * std::sqrt(static_cast<double>(doubled_norm_sq())); }

Weight Weight::operator-() const {
  std::vector<int> d(doubled_);
  for (int& x : d) x = -x;
  return Weight(std::move(d));
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw DimensionError("weight rank mismatch");
  for (std::size_t i = 0; i < doubled_.size(); ++i) doubled_[i] += other.doubled_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw DimensionError("weight rank mismatch");
  for (std::size_t i = 0; i < doubled_.size(); ++i) doubled_[i] -= other.doubled_[i];
  return *this;
}

Weight operator*(int c, const Weight& w) {
  std::vector<int> d(w.doubled_);
  for (int& x : d) x *= c;
  return Weight(std::move(d));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) os << ',';
    if (doubled_[i] % 2 == 0) {
      os << doubled_[i] / 2;
    } else {
      os << doubled_[i] << "/2";
    }
  }
  os << ')';
  return os.str();
}

std::int64_t dot_doubled(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw DimensionError("weight rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

bool GradedLess::operator()(const Weight& a, const Weight& b) const {
  const auto sa = a.doubled_sum();
  const auto sb = b.doubled_sum();
  if (sa != sb) return sa < sb;
  return a.doubled() < b.doubled();
}

}  // namespace bcfusion
