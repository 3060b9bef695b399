#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace expresso {

// Resource caps shared by the enumeration-heavy routines. Exceeding any of them
// raises ErrorCode::kResourceLimit; nothing is ever silently truncated.
struct Limits {
  std::size_t relation_cap = 100'000;       // bounded relational closure
  std::size_t subgroup_order_cap = 5'040;   // |G| accepted by subgroups()
  std::size_t partition_ground_cap = 12;    // exhaustive set-partition search
  std::size_t instance_cap = 1'000'000;     // exact graph closure
};

// Overrides parsed from a string such as
//   "max-arity=4,max-depth=3,k-max=6,instance-cap=5000,relation-cap=20000"
// Unknown keys or malformed values throw ErrorCode::kParseError.
struct LimitOverrides {
  std::optional<std::size_t> max_arity;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> instance_cap;
  std::optional<std::size_t> relation_cap;
  std::optional<std::size_t> subgroup_order_cap;
};

LimitOverrides parse_limit_overrides(std::string_view text);

}  // namespace expresso
