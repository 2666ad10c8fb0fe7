#pragma once

// Hyperelliptic curves in characteristic 2 and Hermitian curves.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dieudonne/eo.hpp"
#include "dieudonne/module.hpp"

namespace dieudonne {

/// Pole orders d_0, ..., d_r of h(x) in y^2 + y = h(x); each odd.
struct PoleDivisor {
  std::vector<std::size_t> d;
};

/// Parses "3,9"; throws std::invalid_argument on malformed or even entries.
PoleDivisor parse_poles(const std::string& text);

struct HyperellipticReport {
  std::size_t g = 0;
  std::size_t r = 0;
  std::size_t f = 0;
  std::vector<std::size_t> c;
  std::size_t s = 0;
  std::size_t s_bound = 0;
  std::size_t e_bound = 0;
  std::vector<EOType> summands;  // rank-0 type of each pole with c_j > 0
};

HyperellipticReport hyp2_analyze(const PoleDivisor& d);
/// [0, 1, 1, 2, 2, ..., floor(g/2)].
EOType hyp2_rank0_type(std::size_t g);
/// Ord1^r + sum of canonical_module(hyp2_rank0_type(c_j)) over F_2.
DieudonneModule hyp2_module_oracle(const PoleDivisor& d);

struct HermitianReport {
  unsigned p = 0;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t g = 0;
  std::uint64_t a = 0;
  std::uint64_t s = 0;
  std::uint64_t e_bound = 0;
  std::vector<std::vector<std::uint64_t>> orbits;  // x2 orbits on Z/(2^n+1) \ {0}
  std::uint64_t zeta_numerator_exponent = 0;
  std::uint64_t points_q2 = 0;
  bool superspecial = false;
  bool ekedahl_ok = false;
};

/// Throws std::overflow_error if a field exceeds 64 bits.
HermitianReport hermitian_analyze(unsigned p, unsigned n);

/// g <= p(p-1)/2.
bool ekedahl_bound(std::uint64_t p, std::uint64_t g) noexcept;

}  // namespace dieudonne
