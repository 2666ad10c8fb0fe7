#pragma once

// Ekedahl-Oort types nu = [nu_1, ..., nu_g] with nu_1 in {0, 1} and
// nu_i <= nu_{i+1} <= nu_i + 1.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dieudonne/module.hpp"

namespace dieudonne {

struct EOType {
  std::vector<std::size_t> nu;

  std::size_t g() const noexcept { return nu.size(); }
  friend auto operator<=>(const EOType&, const EOType&) = default;
};

bool validate(const EOType& t) noexcept;
/// Throws std::invalid_argument for an invalid type.
void require_valid(const EOType& t);

/// All 2^g types of length g in lexicographic order.
std::vector<EOType> enumerate(std::size_t g);
/// Streams the same sequence without materializing it.
void for_each_type(std::size_t g, const std::function<void(const EOType&)>& fn);
/// The index-th type in enumeration order (index < 2^g).
EOType type_at(std::size_t g, std::uint64_t index);

std::size_t f_of(const EOType& t);
std::size_t a_of(const EOType& t);

/// psi(0..2g): psi(i) = nu_i for i <= g, psi(i) = psi(2g - i) + i - g above.
std::vector<std::size_t> extend_final(const EOType& t);

/// The canonical module on e_1..e_2g without a form: V(e_i) = e_psi(i) where
/// psi jumps at i, F(e_{g+m}) = e_{K[m]} for the non-jump indices K.
DieudonneModule canonical_matrices(const EOType& t, unsigned p = 2);
/// canonical_matrices with a quasipolarization attached.
DieudonneModule canonical_module(const EOType& t, unsigned p = 2);

/// Canonical filtration of a BT1 module: closure of {0, M} under V and F^{-1},
/// sorted by dimension.
std::vector<Subspace> canonical_filtration(const DieudonneModule& m);
EOType eo_type_of(const DieudonneModule& m);

std::string nu_string(const EOType& t, char sep = ';');
EOType parse_nu(const std::string& text);

}  // namespace dieudonne
