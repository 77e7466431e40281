#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nshift/field.hpp"
#include "nshift/platform.hpp"

namespace toys {

inline nshift::FieldRef gf7() { return nshift::FieldSpec::prime(7); }
// GF(4) = GF(2)[x]/(x^2 + x + 1)
inline nshift::FieldRef gf4() { return nshift::FieldSpec::extension(2, {1, 1, 1}); }

inline nshift::PlatformRef m2_gf7() {
  static const nshift::PlatformRef spec = nshift::make_field_platform(gf7(), 2);
  return spec;
}
inline nshift::PlatformRef m2_gf4() {
  static const nshift::PlatformRef spec = nshift::make_field_platform(gf4(), 2);
  return spec;
}
inline nshift::PlatformRef m2_kls() {
  static const nshift::PlatformRef spec = nshift::make_field_platform(nshift::FieldSpec::gf2_127(), 2);
  return spec;
}

inline nshift::PlatformElement mat(const nshift::PlatformRef& spec, std::initializer_list<std::uint64_t> e) {
  return nshift::PlatformElement::from_ints(spec, std::vector<std::uint64_t>(e));
}
inline nshift::PlatformElement m7(std::initializer_list<std::uint64_t> e) { return mat(m2_gf7(), e); }

inline nshift::Vector vec(nshift::FieldRef f, std::initializer_list<std::uint64_t> e) {
  nshift::Vector v;
  for (auto x : e) v.push_back(f->from_int(x));
  return v;
}

}  // namespace toys
