#pragma once

#include "qcx/qc_code.hpp"

#include <initializer_list>
#include <vector>

namespace qcx::fixtures {

inline std::vector<Elem> digits(std::initializer_list<int> ds) {
  std::vector<Elem> v;
  for (int d : ds) v.push_back(Elem{static_cast<std::uint8_t>(d)});
  return v;
}

inline std::vector<Elem> zeta(const FieldPtr& F, std::initializer_list<int> logs) {
  std::vector<Elem> v;
  for (int k : logs) v.push_back(k < 0 ? kZero : F->from_log(k));
  return v;
}

inline QcCode example4() {
  auto F = field_make(2);
  return QcCode::build(RingPoly(F, 7, digits({0, 3, 2, 3, 2, 1})), Poly(F, digits({1, 1})));
}

inline QcCode example1() {
  auto F = field_make(2);
  return QcCode::build(RingPoly(F, 15, digits({1, 2, 2, 2})), Poly(F, digits({1, 2, 2, 0, 3, 1, 0, 1, 3, 1})));
}

inline QcCode example2() {
  auto F = field_make(3);
  return QcCode::build(RingPoly(F, 10, digits({1, 5, 2, 1})), Poly(F, digits({5, 3, 1, 0, 5, 7, 1})));
}

inline QcCode example6() {
  auto F = field_make(9);
  return QcCode::build(RingPoly(F, 10, zeta(F, {0, 2, 14})), Poly(F, zeta(F, {48, 44, 10, 36, 52, 58, 44, 0})));
}

inline QcCode example5() {
  auto F = field_make(2);
  return QcCode::build(RingPoly(F, 11, digits({0, 1, 3, 2, 1})), Poly(F, digits({1, 2, 2, 0, 3, 3, 1})));
}

inline std::vector<Elem> example1_x1() { return digits({1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2}); }
inline std::vector<Elem> example2_x1() { return digits({1, 1, 8, 2, 1, 2, 2, 6, 0, 1}); }
inline std::vector<Elem> example2_x2() { return digits({1, 7, 3, 8, 5, 7, 7, 0, 3, 2}); }
inline std::vector<Elem> example6_x1() { return zeta(field_make(9), {44, 71, 56, 22, 52, 73, 33, 58, 58, 33}); }
inline std::vector<Elem> example6_x2() { return zeta(field_make(9), {18, 41, 40, 10, 17, 31, 71, 61, 66, 75}); }

}  // namespace qcx::fixtures
