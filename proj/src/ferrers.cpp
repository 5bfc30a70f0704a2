#include <algorithm>
#include <functional>
#include <numeric>

#include "bcfusion/bmwdual.hpp"
#include "bcfusion/errors.hpp"

namespace bcfusion {

FerrersDiagram::FerrersDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0 || (i > 0 && rows_[i] > rows_[i - 1])) {
      throw DomainError("rows of a Ferrers diagram must be weakly decreasing and nonnegative");
    }
  }
}

FerrersDiagram FerrersDiagram::from_columns(const std::vector<int>& columns) {
  return FerrersDiagram(columns).transpose();
}

std::vector<int> FerrersDiagram::columns() const { return transpose().rows_; }

int FerrersDiagram::row(int i) const {
  return i >= 1 && i <= static_cast<int>(rows_.size()) ? rows_[static_cast<std::size_t>(i - 1)] : 0;
}

int FerrersDiagram::column(int i) const {
  int count = 0;
  for (int r : rows_) count += r >= i ? 1 : 0;
  return count;
}

int FerrersDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

FerrersDiagram FerrersDiagram::transpose() const {
  std::vector<int> cols(rows_.empty() ? 0 : static_cast<std::size_t>(rows_.front()), 0);
  for (int r : rows_) {
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return FerrersDiagram(std::move(cols));
}

std::string FerrersDiagram::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) out += (i ? "," : "") + std::to_string(rows_[i]);
  return out + "]";
}

bool in_gamma(int k, int ell, const FerrersDiagram& lambda) {
  return lambda.column(1) + lambda.column(2) <= 2 * k + 1 && 2 * lambda.row(1) <= ell - 2 * k - 1;
}

std::vector<FerrersDiagram> gamma_set(int k, int ell) {
  if (k < 1 || ell % 2 == 0 || ell <= 2 * k + 1) {
    throw ConfigurationError("Gamma(k, l) needs odd l > 2k + 1; got k=" + std::to_string(k) +
                             ", l=" + std::to_string(ell));
  }
  const int width = (ell - 2 * k - 1) / 2;
  std::vector<FerrersDiagram> out;
  std::vector<int> cols(static_cast<std::size_t>(width), 0);
  std::function<void(int, int)> fill = [&](int pos, int bound) {
    if (pos == width) {
      out.push_back(FerrersDiagram::from_columns(cols));
      return;
    }
    for (int c = 0; c <= bound; ++c) {
      cols[static_cast<std::size_t>(pos)] = c;
      fill(pos + 1, pos == 0 ? std::min(c, 2 * k + 1 - c) : c);
    }
    cols[static_cast<std::size_t>(pos)] = 0;
  };
  fill(0, 2 * k + 1);
  std::sort(out.begin(), out.end(), [](const FerrersDiagram& a, const FerrersDiagram& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.rows() < b.rows();
  });
  return out;
}

Weight bar_map(int k, const FerrersDiagram& lambda) {
  auto cols = lambda.columns();
  if (lambda.column(1) + lambda.column(2) > 2 * k + 1) {
    throw DomainError("bar map needs lambda_1' + lambda_2' <= 2k + 1, got " + lambda.to_string());
  }
  if (!cols.empty()) cols[0] = std::min(2 * k + 1 - cols[0], cols[0]);
  std::sort(cols.begin(), cols.end(), std::greater<>());
  const auto rows = FerrersDiagram(cols).transpose().rows();
  std::vector<int> doubled(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) doubled[i] = 2 * rows[i];
  return Weight(std::move(doubled));
}

Weight psi(int k, int ell, const FerrersDiagram& lambda) {
  if (!in_gamma(k, ell, lambda)) throw DomainError(lambda.to_string() + " is not in Gamma(k, l)");
  const Weight bar = bar_map(k, lambda);
  if (lambda.size() % 2 == 0) return bar;
  const Weight gamma(std::vector<int>(static_cast<std::size_t>(k), ell - 2 * k));
  return gamma - WeylElement::reversal(k).apply(bar);
}

std::vector<FerrersDiagram> box_neighbors(int k, int ell, const FerrersDiagram& lambda) {
  if (!in_gamma(k, ell, lambda)) throw DomainError(lambda.to_string() + " is not in Gamma(k, l)");
  std::vector<FerrersDiagram> out;
  const auto& rows = lambda.rows();
  for (std::size_t i = 0; i <= rows.size(); ++i) {
    std::vector<int> r(rows);
    if (i == r.size()) r.push_back(0);
    // add a box at the end of row i
    if (i == 0 || r[i] < r[i - 1]) {
      std::vector<int> added(r);
      ++added[i];
      FerrersDiagram d(std::move(added));
      if (in_gamma(k, ell, d)) out.push_back(std::move(d));
    }
    // remove the last box of row i
    if (i < rows.size() && (i + 1 == rows.size() || rows[i] > rows[i + 1])) {
      std::vector<int> removed(rows);
      --removed[i];
      out.emplace_back(std::move(removed));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix box_graph(int k, int ell) {
  const auto diagrams = gamma_set(k, ell);
  const auto n = static_cast<Eigen::Index>(diagrams.size());
  std::map<FerrersDiagram, Eigen::Index> index;
  for (Eigen::Index i = 0; i < n; ++i) index.emplace(diagrams[static_cast<std::size_t>(i)], i);
  IntMatrix adj = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const auto& nb : box_neighbors(k, ell, diagrams[static_cast<std::size_t>(i)])) adj(index.at(nb), i) = 1;
  }
  return adj;
}

}  // namespace bcfusion
