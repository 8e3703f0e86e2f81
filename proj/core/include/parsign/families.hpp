#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "parsign/graph.hpp"

namespace parsign {

enum class Family {
  complete,
  complete_minus_e,
  complete_minus_2e,
  complete_minus_P2,
  complete_minus_triangle,
  star,
  path,
  cycle,
  join_p2_independent,
  independent,
};

struct FamilySpec {
  Family family = Family::complete;
  int n = 1;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Smallest order at which the family exists.
int family_min_order(Family f);

/// Named graph with a fixed labeling:
///   star                  center 0
///   join_p2_independent   hubs 0 and 1
///   path / cycle          0-1-...-(n-1)[-0]
///   complete_minus_e      missing 0-1
///   complete_minus_2e     missing 0-1 and 2-3
///   complete_minus_P2     missing 0-1 and 0-2
///   complete_minus_triangle missing 0-1, 0-2, 1-2
/// Throws std::invalid_argument when n is below family_min_order.
Graph generate(const FamilySpec& spec);

}  // namespace parsign
