#pragma once

#include "kspace/knot_tree.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kspace {

using CatalogEntry = std::variant<KglDatum, KnotTree>;

// Built-in KGL data and knot shorthands.
//
//   borromean      n=2, |B_L|=4, rho=(1 2 -), inversion (1 -)
//   whitehead      n=1, |B_L|=2, rho=(1 -),   inversion (1 -)
//   link6_3_2      n=1, |B_L|=2, rho trivial, inversion (1 -)
//   stoimenowN     n=N, |B_L|=N, rho=(1 2 ... N), no inversion datum
//   sakumaN        N odd, |B_L|=2N, rho=(1 2 ... N -), inversion i -> N+1-i
//   fig8, trefoil, knot8_17   knot shorthands
//
// Family members may also be requested as "stoimenow(5)".
CatalogEntry catalog_get(std::string_view name);

const KglDatum* catalog_find_kgl(std::string_view name);
const KnotTree* catalog_find_knot(std::string_view name);

KglDatum stoimenow(std::size_t n);
KglDatum sakuma(std::size_t n);

// Fixed entries plus representative family members, in display order.
std::vector<std::string> catalog_names();

}  // namespace kspace
