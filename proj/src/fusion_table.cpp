#include <algorithm>
#include <stdexcept>

#include "bcfusion/errors.hpp"
#include "bcfusion/fusion.hpp"

namespace bcfusion {

namespace {

struct Entry {
  std::size_t k;
  int c;
};

// Nonzero N_{ij}^k as a list per (i, j).
std::vector<std::vector<Entry>> sparse_rows(const FusionTable& table) {
  const std::size_t n = table.size();
  std::vector<std::vector<Entry>> rows(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (const int c = table(i, j, k); c != 0) rows[i * n + j].push_back({k, c});
      }
    }
  }
  return rows;
}

}  // namespace

FusionTable::FusionTable(AlcoveParams params, std::vector<Weight> labels, std::vector<int> coefficients)
    : params_(std::move(params)), labels_(std::move(labels)), coeffs_(std::move(coefficients)) {
  const std::size_t n = labels_.size();
  if (coeffs_.size() != n * n * n) {
    throw DimensionError("fusion table needs " + std::to_string(n * n * n) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) throw DomainError("duplicate label " + labels_[i].to_string());
  }
}

FusionTable FusionTable::build(const AlcoveParams& params) {
  auto labels = alcove_enumerate(params);
  const std::size_t n = labels.size();
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(labels[i], i);

  std::vector<WeightMultiset> weights;
  weights.reserve(n);
  for (const auto& l : labels) weights.push_back(weight_multiplicities(params.datum(), l));

  std::vector<int> coeffs(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const bool swap = labels[j].doubled_norm_sq() < labels[i].doubled_norm_sq();
      const std::size_t small = swap ? j : i;
      const std::size_t large = swap ? i : j;
      for (const auto& [nu, c] : fuse_with_weights(params, weights[small], labels[large])) {
        const std::size_t k = index.at(nu);
        coeffs[(i * n + j) * n + k] = c;
        coeffs[(j * n + i) * n + k] = c;
      }
    }
  }
  return FusionTable(params, std::move(labels), std::move(coeffs));
}

std::optional<std::size_t> FusionTable::index_of(const Weight& w) const {
  if (auto it = index_.find(w); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t FusionTable::require_index(const Weight& w) const {
  if (auto i = index_of(w)) return *i;
  throw DomainError("label " + w.to_string() + " is not in the alcove");
}

int FusionTable::coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const {
  return (*this)(require_index(lambda), require_index(mu), require_index(nu));
}

IntMatrix fusion_matrix(const FusionTable& table, const Weight& lambda) {
  const std::size_t i = table.require_index(lambda);
  const auto n = static_cast<Eigen::Index>(table.size());
  IntMatrix m(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(k, j) = table(i, static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    }
  }
  return m;
}

PathCounts bratteli_paths(const IntMatrix& adjacency, std::size_t start, int n) {
  if (n < 0) throw DomainError("path length must be nonnegative");
  if (adjacency.rows() != adjacency.cols()) throw DimensionError("adjacency matrix must be square");
  if (start >= static_cast<std::size_t>(adjacency.rows())) throw DimensionError("start vertex out of range");
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> v = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>::Zero(adjacency.rows());
  v(static_cast<Eigen::Index>(start)) = 1;
  for (int step = 0; step < n; ++step) v = adjacency * v;
  PathCounts out;
  out.counts.assign(v.data(), v.data() + v.size());
  for (auto c : out.counts) out.total += c * c;
  return out;
}

PathCounts bratteli_endo_dim(const FusionTable& table, const Weight& generator, int n) {
  return bratteli_paths(fusion_matrix(table, generator), table.unit_index(), n);
}

TableAudit audit_table(const FusionTable& table) {
  const std::size_t n = table.size();
  TableAudit a;
  a.unit = a.symmetric = a.graded = a.nonnegative = true;

  const std::size_t u = table.unit_index();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const int delta = j == k ? 1 : 0;
      if (table(u, j, k) != delta || table(j, u, k) != delta) a.unit = false;
    }
  }

  const auto& labels = table.labels();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int c = table(i, j, k);
        if (c < 0) a.nonnegative = false;
        if (c != table(j, i, k) || c != table(i, k, j)) a.symmetric = false;
        if (c != 0 && labels[k].parity() != labels[i].parity() * labels[j].parity()) a.graded = false;
      }
    }
  }

  // sum_s N_{lm}^s N_{sv}^t == sum_s N_{mv}^s N_{ls}^t. Once the table is
  // commutative, swapping l and v exchanges the two sides, so l <= v suffices.
  const auto rows = sparse_rows(table);
  std::vector<std::int64_t> lhs(n), rhs(n);
  a.associative = true;
  for (std::size_t l = 0; l < n && a.associative; ++l) {
    for (std::size_t m = 0; m < n && a.associative; ++m) {
      for (std::size_t v = a.symmetric ? l : 0; v < n && a.associative; ++v) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [s, c] : rows[l * n + m]) {
          for (const auto& [t, d] : rows[s * n + v]) lhs[t] += static_cast<std::int64_t>(c) * d;
        }
        for (const auto& [s, c] : rows[m * n + v]) {
          for (const auto& [t, d] : rows[l * n + s]) rhs[t] += static_cast<std::int64_t>(c) * d;
        }
        if (lhs != rhs) a.associative = false;
      }
    }
  }
  return a;
}

bool check_spin_rule(const FusionTable& table) {
  const auto& params = table.params();
  if (params.family() != Family::B) throw DomainError("the spin rule applies to type B only");
  const int k = params.rank();
  const std::size_t n = table.size();
  const std::size_t s = table.require_index(params.datum().fundamental_weight(k));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> expected(n, 0);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> d(table.labels()[i].doubled());
      for (int b = 0; b < k; ++b) d[static_cast<std::size_t>(b)] += (mask >> b) & 1u ? -1 : 1;
      if (auto idx = table.index_of(Weight(std::move(d)))) expected[*idx] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table(s, i, j) != expected[j]) return false;
    }
  }
  return true;
}

bool check_vector_rule(const FusionTable& table) {
  const auto& params = table.params();
  const int k = params.rank();
  const std::size_t n = table.size();
  const std::size_t v = table.require_index(params.datum().fundamental_weight(1));
  for (std::size_t i = 0; i < n; ++i) {
    const Weight& mu = table.labels()[i];
    if (!mu.is_integral()) continue;
    std::vector<int> expected(n, 0);
    for (int b = 0; b < k; ++b) {
      for (int step : {-2, 2}) {
        std::vector<int> d(mu.doubled());
        d[static_cast<std::size_t>(b)] += step;
        bool parity_ok = true;
        for (int x : d) parity_ok = parity_ok && x % 2 == 0;
        if (!parity_ok) continue;
        if (auto idx = table.index_of(Weight(std::move(d)))) expected[*idx] = 1;
      }
    }
    // only the B vector representation has a zero weight
    if (params.family() == Family::B && mu.doubled_at(k - 1) > 0) expected[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (table(v, i, j) != expected[j]) return false;
    }
  }
  return true;
}

std::optional<int> generation_exponent(const FusionTable& table, const Weight& generator, int cap) {
  using BoolMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  const IntMatrix adj = fusion_matrix(table, generator).unaryExpr([](std::int64_t x) -> std::int64_t {
    return x != 0 ? 1 : 0;
  });
  const auto n = adj.rows();
  auto pattern = [](const BoolMatrix& m) -> BoolMatrix {
    return m.unaryExpr([](std::int64_t x) -> std::int64_t { return x != 0 ? 1 : 0; });
  };
  BoolMatrix current = BoolMatrix::Identity(n, n);  // pattern of N^s
  for (int s = 0; s <= cap; ++s) {
    BoolMatrix next = pattern(current * adj);
    if (s % 2 == 1 && ((current + next).array() > 0).all()) return s;
    current = std::move(next);
  }
  return std::nullopt;
}

nlohmann::json to_json(const FusionTable& table) {
  const std::size_t n = table.size();
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : table.labels()) labels.push_back(l.doubled());
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json plane = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(table(i, j, k));
      plane.push_back(std::move(row));
    }
    coeffs.push_back(std::move(plane));
  }
  return {{"family", std::string(1, family_letter(table.params().family()))},
          {"rank", table.params().rank()},
          {"ell", table.params().ell()},
          {"labels", std::move(labels)},
          {"N", std::move(coeffs)}};
}

FusionTable fusion_table_from_json(const nlohmann::json& j) {
  try {
    const Family family = parse_family(j.at("family").get<std::string>());
    AlcoveParams params(RootDatum(family, j.at("rank").get<int>()), j.at("ell").get<int>(),
                        Nondegeneracy::kRelaxed);
    std::vector<Weight> labels;
    for (const auto& l : j.at("labels")) labels.emplace_back(l.get<std::vector<int>>());
    if (labels != alcove_enumerate(params)) throw ParseError("labels do not match the alcove");
    const std::size_t n = labels.size();
    std::vector<int> coeffs;
    coeffs.reserve(n * n * n);
    const auto& N = j.at("N");
    if (N.size() != n) throw ParseError("N has the wrong shape");
    for (const auto& plane : N) {
      if (plane.size() != n) throw ParseError("N has the wrong shape");
      for (const auto& row : plane) {
        if (row.size() != n) throw ParseError("N has the wrong shape");
        for (const auto& c : row) coeffs.push_back(c.get<int>());
      }
    }
    return FusionTable(std::move(params), std::move(labels), std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed fusion table: ") + e.what());
  }
}

}  // namespace bcfusion
