#include "bcfusion/graph_iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bcfusion {

namespace {

using Colors = std::vector<std::size_t>;

// One joint refinement round over both graphs so color ids stay comparable.
bool refine(const IntMatrix& a, const IntMatrix& b, Colors& ca, Colors& cb) {
  using Signature = std::pair<std::size_t, std::vector<std::tuple<std::size_t, std::int64_t, std::int64_t>>>;
  auto signature = [](const IntMatrix& m, const Colors& c, std::size_t v) {
    Signature s{c[v], {}};
    for (Eigen::Index u = 0; u < m.rows(); ++u) {
      const auto out = m(static_cast<Eigen::Index>(v), u);
      const auto in = m(u, static_cast<Eigen::Index>(v));
      if (out != 0 || in != 0) s.second.emplace_back(c[static_cast<std::size_t>(u)], out, in);
    }
    std::sort(s.second.begin(), s.second.end());
    return s;
  };
  std::map<Signature, std::size_t> ids;
  std::vector<Signature> sa, sb;
  for (std::size_t v = 0; v < ca.size(); ++v) sa.push_back(signature(a, ca, v));
  for (std::size_t v = 0; v < cb.size(); ++v) sb.push_back(signature(b, cb, v));
  for (const auto& s : sa) ids.emplace(s, 0);
  for (const auto& s : sb) ids.emplace(s, 0);
  std::size_t next = 0;
  for (auto& [s, id] : ids) id = next++;
  std::map<std::size_t, int> old_classes;
  for (auto c : ca) old_classes[c];
  for (auto c : cb) old_classes[c];
  for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = ids.at(sa[v]);
  for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = ids.at(sb[v]);
  // classes only ever split, so a constant count means a fixed point
  return next > old_classes.size();
}

struct Search {
  const IntMatrix& a;
  const IntMatrix& b;
  const Colors& ca;
  const Colors& cb;
  std::vector<std::size_t> order;
  std::vector<std::size_t> map;
  std::vector<bool> used;

  bool consistent(std::size_t v, std::size_t w) const {
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::size_t u = order[i];
      if (map[u] == kUnset) continue;
      const auto vi = static_cast<Eigen::Index>(v), ui = static_cast<Eigen::Index>(u);
      const auto wi = static_cast<Eigen::Index>(w), mi = static_cast<Eigen::Index>(map[u]);
      if (a(vi, ui) != b(wi, mi) || a(ui, vi) != b(mi, wi)) return false;
    }
    return a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) ==
           b(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(w));
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < used.size(); ++w) {
      if (used[w] || cb[w] != ca[v] || !consistent(v, w)) continue;
      map[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      map[v] = kUnset;
    }
    return false;
  }

  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
};

}  // namespace

bool is_graph_isomorphism(const IntMatrix& a, const IntMatrix& b, const std::vector<std::size_t>& f) {
  const auto n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n || f.size() != static_cast<std::size_t>(n)) return false;
  std::vector<bool> hit(f.size(), false);
  for (auto x : f) {
    if (x >= f.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (a(i, j) != b(static_cast<Eigen::Index>(f[static_cast<std::size_t>(i)]),
                       static_cast<Eigen::Index>(f[static_cast<std::size_t>(j)]))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_graph_isomorphism(
    const IntMatrix& a, const IntMatrix& b, const std::vector<std::pair<std::size_t, std::size_t>>& pins) {
  const auto n = static_cast<std::size_t>(a.rows());
  if (a.cols() != a.rows() || b.rows() != b.cols() || static_cast<std::size_t>(b.rows()) != n) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  Colors ca(n, 0), cb(n, 0);
  std::size_t pin_color = 1;
  for (const auto& [x, y] : pins) {
    if (x >= n || y >= n) return std::nullopt;
    ca[x] = cb[y] = pin_color++;
  }
  while (refine(a, b, ca, cb)) {
  }
  {
    Colors sa(ca), sb(cb);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  Search search{a, b, ca, cb, {}, std::vector<std::size_t>(n, Search::kUnset), std::vector<bool>(n, false)};
  // most constrained vertices first: small color classes
  std::map<std::size_t, std::size_t> class_size;
  for (auto c : ca) ++class_size[c];
  search.order.resize(n);
  for (std::size_t v = 0; v < n; ++v) search.order[v] = v;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t x, std::size_t y) { return class_size[ca[x]] < class_size[ca[y]]; });
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

}  // namespace bcfusion
