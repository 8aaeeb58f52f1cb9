#ifndef CREGRO_TESTS_SUPPORT_HPP
#define CREGRO_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "cregro/cregro.hpp"

namespace testing_support {

using Q = cregro::Rationals;
using cregro::ModuleElement;
using cregro::ModuleSpace;
using cregro::Submodule;

inline cregro::io::Naming xyz(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  cregro::io::Naming nm;
  for (std::size_t i = 0; i < n; ++i) nm.vars.push_back(names[i]);
  return nm;
}

template <class Field = Q>
ModuleSpace<Field> space(std::size_t n, std::vector<std::int64_t> shifts = {0}, Field K = Field{}) {
  return cregro::standard_space(K, n, cregro::FreeModuleDescriptor::with_shifts(std::move(shifts)));
}

template <class Field>
ModuleElement<Field> el(const ModuleSpace<Field>& sp, const std::string& s) {
  return cregro::io::read_element(sp, xyz(sp.nvars()), s);
}

template <class Field>
std::vector<ModuleElement<Field>> els(const ModuleSpace<Field>& sp, const std::string& s) {
  return cregro::io::read_elements(sp, xyz(sp.nvars()), s);
}

template <class Field>
Submodule<Field> sub(const ModuleSpace<Field>& sp, const std::string& s) {
  return Submodule<Field>(sp, els(sp, s));
}

template <class Field>
std::string str(const ModuleSpace<Field>& sp, const ModuleElement<Field>& f) {
  return cregro::io::format_element(sp, xyz(sp.nvars()), f);
}

template <class Field>
std::vector<std::string> strs(const ModuleSpace<Field>& sp, const std::vector<ModuleElement<Field>>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(str(sp, f));
  return out;
}

}  // namespace testing_support

#endif
