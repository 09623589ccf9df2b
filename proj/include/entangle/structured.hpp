#pragma once

#include "entangle/matrix.hpp"
#include "entangle/rational.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entangle {

enum class Family { D, F, E, Etilde, G, B, Btilde };

inline constexpr std::array<Family, 7> kAllFamilies{Family::D, Family::F,      Family::E,     Family::Etilde,
                                                    Family::G, Family::B,      Family::Btilde};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::D: return "D";
    case Family::F: return "F";
    case Family::E: return "E";
    case Family::Etilde: return "Etilde";
    case Family::G: return "G";
    case Family::B: return "B";
    case Family::Btilde: return "Btilde";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown matrix family '" + std::string(name) + "'");
}

/// One member of a banded family, parameterized by (a, b, n).
///
/// b is free for D, F and E. The other families are only defined with
/// b = 1 and reject anything else.
struct BandedFamily {
  Family family = Family::E;
  Rational a{0};
  Rational b{1};
  std::size_t n = 1;
};

/// Matrix whose column j holds `signature` starting at row j + offset,
/// truncated at the top and bottom edges.
inline ExactMatrix shift_matrix(std::span<const Rational> signature, std::size_t rows, std::size_t cols,
                                std::ptrdiff_t offset = 0) {
  ExactMatrix m(rows, cols);
  const auto height = static_cast<std::ptrdiff_t>(rows);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t t = 0; t < signature.size(); ++t) {
      const std::ptrdiff_t r = static_cast<std::ptrdiff_t>(j + t) + offset;
      if (r >= 0 && r < height) m(static_cast<std::size_t>(r), j) = signature[t];
    }
  return m;
}

/// Column signature read top to bottom.
inline std::vector<Rational> column_pattern(const BandedFamily& spec) {
  const Rational& a = spec.a;
  const Rational& b = spec.b;
  switch (spec.family) {
    case Family::D:
    case Family::F:
    case Family::E: return {b, -a, a, -b};
    case Family::Etilde:
    case Family::Btilde: return {1, a, a, 1};
    case Family::G: return {1, a, 1};
    case Family::B: return {1, -a, a, -1};
  }
  return {};
}

/// Row count and first-column offset of the signature window.
struct BandLayout {
  std::size_t rows;
  std::ptrdiff_t offset;
};

inline BandLayout band_layout(const BandedFamily& spec) {
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::D: return {n, -1};
    case Family::F: return {n, -2};
    case Family::E:
    case Family::Etilde: return {n + 1, -1};
    case Family::G: return {n + 2, 0};
    case Family::B:
    case Family::Btilde: return {n + 3, 0};
  }
  return {n, 0};
}

inline ExactMatrix build(const BandedFamily& spec) {
  if (spec.n < 1) throw std::invalid_argument("banded family needs n >= 1");
  const bool free_b = spec.family == Family::D || spec.family == Family::F || spec.family == Family::E;
  if (!free_b && spec.b != 1)
    throw std::invalid_argument("family " + std::string(family_name(spec.family)) + " is only defined for b = 1");
  const auto pattern = column_pattern(spec);
  const auto layout = band_layout(spec);
  return shift_matrix(pattern, layout.rows, spec.n, layout.offset);
}

/// build(spec) with the 1-based `rows` removed, e.g. E_n^k, G^{i,j}, B^{i,j,k}.
inline ExactMatrix deleted_variant(const BandedFamily& spec, const IndexSet& rows) {
  return delete_rows(build(spec), rows);
}

}  // namespace entangle
