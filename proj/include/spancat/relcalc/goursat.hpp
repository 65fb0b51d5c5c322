#pragma once

#include <json.hpp>

#include "spancat/finab/finab_instance.hpp"
#include "spancat/relcalc/relation.hpp"

namespace spancat::finab {

using AbRelation = Relation<FinAb>;

/// Image of the pullback of d and e under (m . e_bar, n . d_bar) in X + Z.
SubgroupRelation goursat_to_subgroup(const AbRelation& r);

/// Factorizes the two projections of S as (e', U, m) and (d', V, n) and
/// pushes out e' and d' to get d : U -> Y and e : V -> Y.
AbRelation subgroup_to_zigzag(const FinAb& c, const SubgroupRelation& s);

/// {(z, x) : (x, z) in s}.
SubgroupRelation transpose(const SubgroupRelation& s);

/// {"X", "Z", "generators": [[x..., z...], ...], "order"}.
nlohmann::json subgroup_to_json(const SubgroupRelation& s);

}  // namespace spancat::finab
