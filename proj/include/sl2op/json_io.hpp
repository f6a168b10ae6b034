#pragma once

#include <json.hpp>

#include "sl2op/decomp.hpp"
#include "sl2op/tensorspace.hpp"

namespace sl2op {

// Canonical JSON forms. Coefficients are decimal strings because values
// exceed the 64-bit range at moderate sizes; entries are emitted in
// lexicographic index order so that parse + re-serialize is
// byte-identical.
using Json = nlohmann::ordered_json;

Json tensor_to_json(const SparseTensor& t);
SparseTensor tensor_from_json(const Json& j);

Json report_to_json(const DecompositionReport& report);
DecompositionReport report_from_json(const Json& j);

} // namespace sl2op
