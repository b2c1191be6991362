#pragma once

#include <json.hpp>

#include "bnring/betti.hpp"
#include "bnring/kring.hpp"
#include "bnring/laurent.hpp"
#include "bnring/partition.hpp"
#include "bnring/repring.hpp"

// JSON wire formats.  Big integers are always decimal strings.
namespace bnring::io {

using Json = nlohmann::json;

Json to_json(const Partition& p);                   // [3,1]
Partition partition_from_json(const Json& j);

Json to_json(const LaurentPoly& p);                 // [[exp,"coeff"],...] by exponent
LaurentPoly laurent_from_json(const Json& j);

/// {"g","hyperelliptic","terms":[{"partition","coeff"}]}, terms sorted
/// lexicographically by partition.
Json to_json(const KClass& k);
KClass kclass_from_json(const Json& j);

/// {"partition","g","hyperelliptic","h","P","h_perverse","euler"}
Json to_json(const BettiReport& r);
BettiReport betti_report_from_json(const Json& j);

/// {"group":"SL"|"Sp","rank","terms":[{"label","mult"}]}
Json to_json(const RepElement& r);
RepElement rep_from_json(const Json& j);

Json to_json(const ComparisonReport& r);

} // namespace bnring::io
