#pragma once
#include "twistlab/curve.hpp"

// The two reference curves used throughout the test suite.
inline twistlab::Curve curve_11a() {
  twistlab::Curve E;
  E.a = {0, -1, 1, -10, -20};
  E.conductor = 11;
  E.root_number = 1;
  E.name = "11a";
  return E;
}

inline twistlab::Curve curve_37a() {
  twistlab::Curve E;
  E.a = {0, 0, 1, -1, 0};
  E.conductor = 37;
  E.root_number = -1;
  E.name = "37a";
  return E;
}
