#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace statevol {

/// Scalar field of the matrix entries. `field_dim` is the number of real
/// components carried by one off-diagonal entry (1, 2 or 4).
enum class Field { real, complex, quaternion };

constexpr int field_dim(Field f) {
  switch (f) {
    case Field::real: return 1;
    case Field::complex: return 2;
    case Field::quaternion: return 4;
  }
  return 0;
}

inline std::string_view field_name(Field f) {
  switch (f) {
    case Field::real: return "real";
    case Field::complex: return "complex";
    case Field::quaternion: return "quaternion";
  }
  return "?";
}

inline Field field_from_name(std::string_view s) {
  if (s == "real" || s == "r") return Field::real;
  if (s == "complex" || s == "c") return Field::complex;
  if (s == "quaternion" || s == "quat" || s == "h") return Field::quaternion;
  throw std::invalid_argument("unknown scalar field: " + std::string(s));
}

}  // namespace statevol
