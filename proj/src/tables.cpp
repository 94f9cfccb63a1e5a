#include "holobrace/tables.hpp"

namespace holobrace {

VariantMatrix closed_form_regular_counts(std::uint64_t p) {
  const std::uint64_t p2 = p * p, p3 = p2 * p;
  return {{
      {p, 2 * p3, 0, 0, 0},
      {1, 2, 0, 0, 0},
      {0, 0, p2, 2 * p, p3 * (3 * p + 1)},
      {0, 0, p2 * (p + 1), 2 * p * (p + 1), p3 * (p + 1) * (3 * p + 1)},
      {0, 0, 1, 2, 2 * p3 + p2 - p + 2},
  }};
}

VariantMatrix closed_form_hgs_counts(std::uint64_t p) {
  const std::uint64_t p2 = p * p, p3 = p2 * p;
  return {{
      {p, 2 * p, 0, 0, 0},
      {p2, 2, 0, 0, 0},
      {0, 0, p2, 2 * p * (p + 1), p * (3 * p + 1)},
      {0, 0, p2, 2 * p * (p + 1), p * (3 * p + 1)},
      {0, 0, p2, 2 * p2 * (p + 1), 2 * p3 + p2 - p + 2},
  }};
}

VariantMatrix closed_form_brace_counts(std::uint64_t p) {
  return {{
      {2, 4, 0, 0, 0},
      {1, 2, 0, 0, 0},
      {0, 0, 2, 2, 5},
      {0, 0, 2, 8, p + 10},
      {0, 0, 1, 2, 5},
  }};
}

std::array<std::uint64_t, 5> closed_form_semiregular_counts(std::uint64_t p) {
  const std::uint64_t p2 = p * p;
  return {p, p2 * p - p2, p2, p2 - p, p2 * (p - 1) * (p - 1) * (p + 1)};
}

std::vector<BraceTableRow> closed_form_brace_rows(Variant2p2 additive, std::uint64_t p) {
  using V = Variant2p2;
  const std::uint64_t p2 = p * p, p3 = p2 * p, q = p - 1;
  switch (additive) {
    case V::Cyclic:
      return {{V::Cyclic, 2 * p2, 2 * p2, p * q, 1},
              {V::Cyclic, 2 * p, 2 * p, p * q, 1},
              {V::Dihedral, p2, 1, p * q, 1}};
    case V::Dihedral:
      return {{V::Cyclic, 1, 1, p * q, 2}, {V::Cyclic, 1, 1, p, 2}, {V::Dihedral, 1, 1, p3 * q, 2}};
    case V::CpxC2p:
      return {{V::CpxC2p, 2 * p2, 2 * p2, p * (p + 1) * q * q, 1},
              {V::CpxC2p, 2 * p, 2 * p, p * q, 1},
              {V::CpxD2p, p2, p, q * q, 1},
              {V::CpxD2p, p, p, q, 1},
              {V::CpCpC2, p2, 1, p * (p + 1) * q * q, 1}};
    case V::CpxD2p:
      return {{V::CpxC2p, p, p, q * q, 2},   {V::CpxD2p, p, p, p * q * q, 2}, {V::CpxD2p, 1, 1, p * q, 3},
              {V::CpxD2p, p, 1, p * q * q, 1}, {V::CpxD2p, p, 1, q * q, 1},     {V::CpxD2p, p, 1, p * q, 1},
              {V::CpCpC2, p, 1, p * q * q, 2}};
    case V::CpCpC2:
      return {{V::CpxC2p, 1, 1, p * (p + 1) * q * q, 2},
              {V::CpxC2p, 1, 1, p * q, 2},
              {V::CpxC2p, 1, 1, q * q, 1},
              {V::CpxD2p, 1, 1, p * q * q, 6},
              {V::CpxD2p, 1, 1, p * q, p + 3},
              {V::CpxD2p, 1, 1, q, 1},
              {V::CpCpC2, 1, 1, p3 * (p + 1) * q * q, 2},
              {V::CpCpC2, 1, 1, p * q * q, 1},
              {V::CpCpC2, 1, 1, p2 * q, 1},
              {V::CpCpC2, 1, 1, p2, 1}};
  }
  return {};
}

}  // namespace holobrace
