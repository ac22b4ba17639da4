#pragma once

#include <random>
#include <string>

#include "groth/poly.hpp"

namespace testing_helpers {

using namespace groth;

inline Polynomial X(Universe u, int i) { return Polynomial::variable(u, Variable::x(i)); }
inline Polynomial Y(Universe u, int j) { return Polynomial::variable(u, Variable::y(j)); }
inline Polynomial B(Universe u) { return Polynomial::variable(u, Variable::beta()); }
inline Polynomial C(Universe u, long c) { return Polynomial::constant(u, c); }

}  // namespace testing_helpers
