#pragma once

#include <concepts>
#include <string_view>

#include "qtorsion/rational.hpp"
#include "qtorsion/rational_function.hpp"

namespace qtorsion {

enum class FieldTag { Q, Qt };

/// Name used in documents: "Q" or "Q(t)".
constexpr std::string_view field_name(FieldTag tag) {
  return tag == FieldTag::Q ? "Q" : "Q(t)";
}

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr FieldTag tag = FieldTag::Q;
  static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <>
struct FieldTraits<RationalFunction> {
  static constexpr FieldTag tag = FieldTag::Qt;
  static RationalFunction parse(std::string_view s) { return RationalFunction::parse(s); }
};

template <class F>
concept Field = requires(F a, F b) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  FieldTraits<F>::tag;
};

}  // namespace qtorsion
