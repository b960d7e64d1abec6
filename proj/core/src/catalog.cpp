#include "arkimex/catalog.hpp"

#include "arkimex/coefficient_file.hpp"
#include "arkimex/errors.hpp"

namespace arkimex {

namespace detail {
std::string_view builtin_catalog_text();
}

const std::vector<ArkMethod>& builtin_catalog() {
  static const std::vector<ArkMethod> methods = parse_coefficient_file(detail::builtin_catalog_text());
  return methods;
}

const ArkMethod* find_method(const std::vector<ArkMethod>& methods, std::string_view name) {
  for (const auto& m : methods)
    if (m.name == name) return &m;
  return nullptr;
}

const ArkMethod& get_method(std::string_view name) {
  if (const ArkMethod* m = find_method(builtin_catalog(), name)) return *m;
  throw UnknownMethodError(std::string(name));
}

std::vector<std::string> method_names(const std::vector<ArkMethod>& methods) {
  std::vector<std::string> names;
  names.reserve(methods.size());
  for (const auto& m : methods) names.push_back(m.name);
  return names;
}

}  // namespace arkimex
