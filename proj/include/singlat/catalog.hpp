#pragma once

#include "singlat/dsl.hpp"
#include "singlat/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace singlat {

/// Catalog entries as documents (vertex order is fixed):
///   paper-z7            E1 E2 c E3 E4 f: the -2 chain E1-E2-c-E3, E4 (-3)
///                       after E3, and a -2 leaf f on c
///   A<n>                chain E1..En of -2 curves, n >= 1
///   D<n>                chain E1..E(n-2), leaves E(n-1), En on E(n-2), n >= 4
///   E6, E7, E8          chain E1..E(n-1), branch En on E3
///   gamma-2-3-7         centre c (-1) with leaves l2, l3, l7 (-2, -3, -7)
///   cusp-3x3            triangle E1 E2 E3 of -3 curves
///   simply-elliptic-d3  one genus-1 curve E with euler -3
/// Unknown names raise InputError listing the known ones.
GraphDocument catalog_document(std::string_view name);

ResolutionGraph catalog(std::string_view name);

/// Concrete names for listing; A<n> and D<n> appear as small instances.
std::vector<std::string> catalog_names();

/// The known name patterns, for messages.
std::string catalog_patterns();

}  // namespace singlat
