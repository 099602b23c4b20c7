#pragma once

#include <vector>

#include "lpa/poset.hpp"

namespace lpa {

/// Simplicial complex of chains: faces_by_dim[k] lists the chains with k+1
/// elements, each sorted increasingly, the list itself sorted.
struct OrderComplex {
  std::vector<std::vector<std::vector<int>>> faces_by_dim;
};

/// Order complex truncated to faces of dimension <= max_dim (all faces when
/// max_dim is negative).
OrderComplex order_complex(const Poset& p, int max_dim = -1);

/// Rational Betti numbers b_0..b_max_dim of the order complex, from ranks of
/// the boundary maps.
std::vector<std::size_t> betti_numbers(const Poset& p, int max_dim);

}  // namespace lpa
