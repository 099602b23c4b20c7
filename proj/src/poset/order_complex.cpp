#include "lpa/order_complex.hpp"

#include <algorithm>
#include <map>

#include "lpa/matrix.hpp"

namespace lpa {

OrderComplex order_complex(const Poset& p, int max_dim) {
  OrderComplex oc;
  std::vector<std::vector<int>> layer;
  for (int v = 1; v <= p.size(); ++v) layer.push_back({v});
  int dim = 0;
  while (!layer.empty() && (max_dim < 0 || dim <= max_dim)) {
    oc.faces_by_dim.push_back(layer);
    std::vector<std::vector<int>> next;
    for (const auto& chain : layer)
      for (int w : p.successors(chain.back())) {
        auto longer = chain;
        longer.push_back(w);
        next.push_back(std::move(longer));
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
    ++dim;
  }
  return oc;
}

std::vector<std::size_t> betti_numbers(const Poset& p, int max_dim) {
  // Faces up to dimension max_dim + 1 are needed for the last boundary map.
  const OrderComplex oc = order_complex(p, max_dim + 1);
  const int top = static_cast<int>(oc.faces_by_dim.size()) - 1;
  auto face_count = [&](int k) -> std::size_t {
    return (k >= 0 && k <= top) ? oc.faces_by_dim[k].size() : 0;
  };
  // rank of the boundary map from k-faces to (k-1)-faces.
  auto boundary_rank = [&](int k) -> std::size_t {
    if (k <= 0 || k > top) return 0;
    std::map<std::vector<int>, std::size_t> position;
    const auto& lower = oc.faces_by_dim[k - 1];
    for (std::size_t i = 0; i < lower.size(); ++i) position.emplace(lower[i], i);
    std::vector<SparseRow> rows;
    rows.reserve(oc.faces_by_dim[k].size());
    for (const auto& face : oc.faces_by_dim[k]) {
      SparseRow row;
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t j = 0; j < face.size(); ++j)
          if (j != drop) sub.push_back(face[j]);
        row.emplace_back(position.at(sub), Rational(drop % 2 == 0 ? 1 : -1));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
    return sparse_rank(std::move(rows));
  };
  std::vector<std::size_t> betti;
  std::size_t rank_k = 0;  // the boundary of a vertex is zero
  for (int k = 0; k <= max_dim; ++k) {
    const std::size_t rank_next = boundary_rank(k + 1);
    betti.push_back(face_count(k) - rank_k - rank_next);
    rank_k = rank_next;
  }
  return betti;
}

}  // namespace lpa
