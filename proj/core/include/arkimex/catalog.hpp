#pragma once

#include "arkimex/tableau.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arkimex {

/// The built-in catalog (compiled from data/catalog.json), parsed and
/// validated once.
const std::vector<ArkMethod>& builtin_catalog();

/// Looks up a method in the built-in catalog; throws UnknownMethodError.
const ArkMethod& get_method(std::string_view name);

const ArkMethod* find_method(const std::vector<ArkMethod>& methods, std::string_view name);

std::vector<std::string> method_names(const std::vector<ArkMethod>& methods);

}  // namespace arkimex
