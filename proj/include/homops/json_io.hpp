#pragma once

#include <nlohmann/json_fwd.hpp>

#include "homops/formal.hpp"

namespace homops {

using json = nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const FinSetMap& f);
FinSetMap finset_map_from_json(const json& j);

json to_json(const Morphism& m);
Morphism morphism_from_json(const json& j);

json to_json(const OperationFamily& f);

json to_json(const OperationSpec& s);
OperationSpec operation_spec_from_json(const json& j);

json to_json(const MultiOperation& x);

json chain_to_json(const HochschildChain& c);
HochschildChain chain_from_json(const json& j, const GradedCommutativeAlgebra& a);

json multichain_to_json(const MultiChain& c);
MultiChain multichain_from_json(const json& j, const GradedCommutativeAlgebra& a, int n1, int m1);

const GradedCommutativeAlgebra& algebra_by_name(const std::string& name);

// Canonical serialization: sorted keys, no whitespace variation, newline at
// the end, so identical inputs produce identical bytes.
std::string canonical_dump(const json& j);

}  // namespace homops
