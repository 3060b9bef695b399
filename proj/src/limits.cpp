#include "expresso/limits.hpp"

#include <charconv>
#include <string>

#include "expresso/error.hpp"

namespace expresso {

LimitOverrides parse_limit_overrides(std::string_view text) {
  LimitOverrides out;
  std::size_t column = 1;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(1, column, "expected key=value");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc{} || end != value.data() + value.size() || value.empty()) {
      throw ParseError(1, column + eq + 1, "invalid number '" + std::string(value) + "'");
    }
    if (key == "max-arity") out.max_arity = n;
    else if (key == "max-depth") out.max_depth = n;
    else if (key == "k-max") out.k_max = n;
    else if (key == "instance-cap") out.instance_cap = n;
    else if (key == "relation-cap") out.relation_cap = n;
    else if (key == "subgroup-order-cap") out.subgroup_order_cap = n;
    else throw ParseError(1, column, "unknown limit '" + std::string(key) + "'");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    column += comma + 1;
  }
  return out;
}

}  // namespace expresso
