#pragma once

#include <cstdint>

#include "spancat/relcalc/goursat.hpp"
#include "spancat/relcalc/rel_checks.hpp"

namespace spancat::finab {

/// subgroup -> zig-zag -> subgroup is the identity for every subgroup of
/// X + Z over catalog pairs with |X + Z| <= max_sum_order.
CheckReport check_goursat_roundtrip(const FinAb& c, std::int64_t max_sum_order = 16);

/// zig-zag -> subgroup -> zig-zag stays in the end-fixed iso class, by
/// iso search rather than by comparing subgroups.
CheckReport check_zigzag_roundtrip(Workbench<FinAb>& wb, const CheckOptions& opt);

/// The subgroup of the reversed relation is the transposed subgroup.
CheckReport check_reverse_transpose(Workbench<FinAb>& wb, const CheckOptions& opt);

SuiteReport suite_goursat(Workbench<FinAb>& wb, const CheckOptions& opt, std::int64_t max_sum_order = 16);

}  // namespace spancat::finab
