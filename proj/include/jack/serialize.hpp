#pragma once

#include <string>

#include "json.hpp"
#include "jack/hook_tableaux.hpp"
#include "jack/superpoly.hpp"

namespace jack {

using Json = nlohmann::json;

Json kfield_to_json(const KField& x);
KField kfield_from_json(const Json& j);

Json fermion_to_json(const FermionPoly& p);
FermionPoly fermion_from_json(const Json& j);

Json superpoly_to_json(const SuperPoly& p);
SuperPoly superpoly_from_json(const Json& j);

Json label_to_json(const HookLabel& label);

/// 64-bit FNV-1a digest as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace jack
