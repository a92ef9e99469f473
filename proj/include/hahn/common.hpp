#pragma once

#include <compare>
#include <string_view>

namespace hahn {

/// The moduli r for which rΓ is ever consulted.
enum class Divisor : int { two = 2, three = 3, six = 6 };

Divisor divisor_from_int(long r);
inline int to_int(Divisor r) { return static_cast<int>(r); }

std::string_view to_string(std::strong_ordering ord);

}  // namespace hahn
