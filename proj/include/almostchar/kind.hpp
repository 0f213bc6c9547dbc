#pragma once

#include <string>
#include <string_view>

#include "almostchar/error.hpp"

namespace almostchar {

/// B covers types B_n and C_n (odd defects); D is split type D_n (defect 0 or 0 mod 4).
enum class Kind { B, D };

inline std::string_view kind_name(Kind k) { return k == Kind::B ? "B" : "D"; }

inline Kind parse_kind(std::string_view s) {
  if (s == "B" || s == "b" || s == "C" || s == "c") return Kind::B;
  if (s == "D" || s == "d") return Kind::D;
  throw InvalidInput("unknown kind '" + std::string(s) + "' (expected B or D)");
}

}  // namespace almostchar
