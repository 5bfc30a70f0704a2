#include "bcfusion/root_datum.hpp"

#include <algorithm>
#include <numeric>

#include "bcfusion/errors.hpp"

namespace bcfusion {

char family_letter(Family f) { return f == Family::B ? 'B' : 'C'; }

Family parse_family(const std::string& text) {
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  throw ParseError("unknown family '" + text + "' (expected B or C)");
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement::WeylElement(int rank)
    : perm_(static_cast<std::size_t>(rank)), signs_(static_cast<std::size_t>(rank), 1) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

WeylElement::WeylElement(std::vector<int> permutation, std::vector<int> signs)
    : perm_(std::move(permutation)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw DimensionError("permutation/sign length mismatch");
  std::vector<int> check(perm_);
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<int>(i)) throw DomainError("not a permutation");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");
  }
}

int WeylElement::signature() const {
  int sign = 1;
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm_[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  for (int s : signs_) sign *= s;
  return sign;
}

std::vector<int> WeylElement::apply(const std::vector<int>& doubled) const {
  if (doubled.size() != perm_.size()) throw DimensionError("Weyl element rank mismatch");
  std::vector<int> out(doubled.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = signs_[i] * doubled[static_cast<std::size_t>(perm_[i])];
  }
  return out;
}

Weight WeylElement::apply(const Weight& x) const { return Weight(apply(x.doubled())); }

WeylElement WeylElement::compose(const WeylElement& other) const {
  // ((this o other) x)_i = s_i * (other x)_{p_i} = s_i * s'_{p_i} * x_{p'_{p_i}}
  if (other.rank() != rank()) throw DimensionError("Weyl element rank mismatch");
  std::vector<int> p(perm_.size());
  std::vector<int> s(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto pi = static_cast<std::size_t>(perm_[i]);
    p[i] = other.perm_[pi];
    s[i] = signs_[i] * other.signs_[pi];
  }
  return WeylElement(std::move(p), std::move(s));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  std::vector<int> s(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto pi = static_cast<std::size_t>(perm_[i]);
    p[pi] = static_cast<int>(i);
    s[pi] = signs_[i];
  }
  return WeylElement(std::move(p), std::move(s));
}

WeylElement WeylElement::reversal(int rank) {
  std::vector<int> p(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) p[static_cast<std::size_t>(i)] = rank - 1 - i;
  return WeylElement(std::move(p), std::vector<int>(static_cast<std::size_t>(rank), 1));
}

std::vector<WeylElement> WeylElement::enumerate(int rank) {
  if (rank < 1 || rank > 8) throw InvalidRank("Weyl group enumeration supports rank 1..8");
  std::vector<WeylElement> out;
  std::vector<int> p(static_cast<std::size_t>(rank));
  std::iota(p.begin(), p.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      std::vector<int> s(static_cast<std::size_t>(rank));
      for (int i = 0; i < rank; ++i) s[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
      out.emplace_back(p, std::move(s));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------------------
// RootDatum

namespace {

Weight unit_vector_sum(int rank, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<int> v(static_cast<std::size_t>(rank), 0);
  for (auto [index, coeff] : terms) v[static_cast<std::size_t>(index)] += coeff;
  return Weight::from_integers(v);
}

}  // namespace

RootDatum::RootDatum(Family family, int rank)
    : family_(family), rank_(rank), form_scale_(family == Family::B ? 2 : 1) {
  if (rank < 2) throw InvalidRank("rank must be at least 2");

  for (int s = 0; s < rank; ++s) {
    for (int t = s + 1; t < rank; ++t) {
      positive_roots_.push_back(unit_vector_sum(rank, {{s, 1}, {t, -1}}));
      positive_roots_.push_back(unit_vector_sum(rank, {{s, 1}, {t, 1}}));
    }
  }
  const int long_coeff = family == Family::B ? 1 : 2;
  for (int u = 0; u < rank; ++u) positive_roots_.push_back(unit_vector_sum(rank, {{u, long_coeff}}));

  std::vector<int> rho2(static_cast<std::size_t>(rank), 0);
  for (const Weight& alpha : positive_roots_) {
    // doubled(alpha) = 2 alpha, so the plain integer root vector is doubled(alpha) / 2
    const auto norm_sq_true = alpha.doubled_norm_sq() / 4;
    const auto form_aa = form_scale_ * norm_sq_true;
    std::vector<int> coroot(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
      const int a = alpha.doubled_at(i) / 2;
      rho2[static_cast<std::size_t>(i)] += a;
      coroot[static_cast<std::size_t>(i)] = static_cast<int>(4 * a / form_aa);
    }
    positive_coroots_.push_back(std::move(coroot));
  }
  rho_ = Weight(rho2);

  theta_ = family == Family::B ? unit_vector_sum(rank, {{0, 1}}) : unit_vector_sum(rank, {{0, 1}, {1, 1}});
  // theta is short, form(theta, theta) = 2, so its coroot is theta itself.
  theta_check_ = theta_;
}

std::int64_t RootDatum::form_x4(const Weight& a, const Weight& b) const {
  return form_scale_ * dot_doubled(a, b);
}

Rational RootDatum::form(const Weight& a, const Weight& b) const {
  return Rational(form_x4(a, b), 4);
}

std::int64_t RootDatum::pairing_x4(const Weight& a, const std::vector<int>& coroot) const {
  return form_scale_ * dot_doubled(a.doubled(), coroot);
}

std::int64_t RootDatum::pairing_theta_check(const Weight& a) const {
  const auto x4 = form_x4(a, theta_check_);
  if (x4 % 4 != 0) throw DomainError("weight " + a.to_string() + " is outside the weight lattice");
  return x4 / 4;
}

Weight RootDatum::fundamental_weight(int i) const {
  if (i < 1 || i > rank_) throw DomainError("fundamental weight index out of range");
  std::vector<int> d(static_cast<std::size_t>(rank_), 0);
  if (family_ == Family::B && i == rank_) {
    std::fill(d.begin(), d.end(), 1);
  } else {
    std::fill(d.begin(), d.begin() + i, 2);
  }
  return Weight(std::move(d));
}

std::optional<std::vector<std::int64_t>> RootDatum::simple_root_coordinates(const Weight& x) const {
  if (x.rank() != rank_) throw DimensionError("weight rank mismatch");
  if (!x.is_integral()) return std::nullopt;
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank_));
  std::int64_t partial = 0;
  for (int j = 0; j < rank_; ++j) {
    partial += x.doubled_at(j) / 2;
    c[static_cast<std::size_t>(j)] = partial;
  }
  if (family_ == Family::C) {
    if (partial % 2 != 0) return std::nullopt;
    c.back() = partial / 2;
  }
  return c;
}

bool RootDatum::in_weight_lattice(const Weight& x) const {
  if (x.rank() != rank_) return false;
  return family_ == Family::B || x.is_integral();
}

RootDatum make_root_datum(Family family, int rank) { return RootDatum(family, rank); }

// ---------------------------------------------------------------------------

DominantReduction dominant_reduce(const RootDatum& datum, const Weight& x) {
  if (x.rank() != datum.rank()) throw DimensionError("weight rank mismatch");
  const auto& d = x.doubled();
  const auto n = d.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(d[static_cast<std::size_t>(a)]) > std::abs(d[static_cast<std::size_t>(b)]);
  });
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = d[static_cast<std::size_t>(order[i])] < 0 ? -1 : 1;
  WeylElement w(std::move(order), std::move(signs));
  Weight dom = w.apply(x);
  return {std::move(w), std::move(dom)};
}

std::vector<Weight> weyl_orbit(const Weight& x) {
  std::vector<int> abs_sorted(x.doubled());
  for (int& v : abs_sorted) v = std::abs(v);
  std::sort(abs_sorted.begin(), abs_sorted.end());
  std::vector<Weight> out;
  do {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < abs_sorted.size(); ++i) {
      if (abs_sorted[i] != 0) nonzero.push_back(i);
    }
    for (unsigned mask = 0; mask < (1u << nonzero.size()); ++mask) {
      std::vector<int> v(abs_sorted);
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if ((mask >> b) & 1u) v[nonzero[b]] = -v[nonzero[b]];
      }
      out.emplace_back(std::move(v));
    }
  } while (std::next_permutation(abs_sorted.begin(), abs_sorted.end()));
  return out;
}

std::int64_t weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  if (!lambda.is_dominant()) throw DomainError("weyl_dimension needs a dominant weight");
  const Weight shifted = lambda + datum.rho();
  Rational dim(1);
  for (const Weight& alpha : datum.positive_roots()) {
    dim *= Rational(datum.form_x4(shifted, alpha), datum.form_x4(datum.rho(), alpha));
  }
  if (dim.denominator() != 1) throw DomainError("Weyl dimension is not an integer");
  return dim.numerator();
}

}  // namespace bcfusion
