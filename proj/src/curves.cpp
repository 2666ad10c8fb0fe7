#include "dieudonne/curves.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "dieudonne/constructions.hpp"

namespace dieudonne {

PoleDivisor parse_poles(const std::string& text) {
  PoleDivisor out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc{} || ptr != text.data() + end) throw std::invalid_argument("bad pole order in '" + text + "'");
    if (v % 2 == 0) throw std::invalid_argument("pole orders must be odd");
    out.d.push_back(v);
    pos = end + 1;
  }
  return out;
}

EOType hyp2_rank0_type(std::size_t g) {
  EOType t;
  for (std::size_t i = 1; i <= g; ++i) t.nu.push_back(i / 2);
  if (a_of(t) != (g + 1) / 2) throw std::logic_error("rank-0 type has the wrong a-number");
  return t;
}

HyperellipticReport hyp2_analyze(const PoleDivisor& d) {
  if (d.d.empty()) throw std::invalid_argument("pole divisor must be nonempty");
  HyperellipticReport rep;
  rep.r = d.d.size() - 1;
  rep.f = rep.r;
  rep.g = rep.r;
  for (auto dj : d.d) {
    if (dj % 2 == 0) throw std::invalid_argument("pole orders must be odd");
    const std::size_t cj = (dj - 1) / 2;
    rep.c.push_back(cj);
    rep.g += cj;
    if (cj % 3 == 1) ++rep.s;
    if (cj > 0) rep.summands.push_back(hyp2_rank0_type(cj));
  }
  rep.s_bound = 1 + rep.r;
  rep.e_bound = std::min(1 + 2 * rep.r, rep.r + rep.s);
  return rep;
}

DieudonneModule hyp2_module_oracle(const PoleDivisor& d) {
  const auto rep = hyp2_analyze(d);
  DieudonneModule out = DieudonneModule::zero(PrimeField(2));
  for (std::size_t i = 0; i < rep.r; ++i) out = direct_sum(out, ord1(2));
  for (const auto& t : rep.summands) out = direct_sum(out, canonical_module(t, 2));
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Hermitian data overflows 64 bits");
  return out;
}

std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = checked_mul(out, b);
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Hermitian data overflows 64 bits");
  return out;
}

}  // namespace

HermitianReport hermitian_analyze(unsigned p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > 62) throw std::overflow_error("orbit modulus 2^n + 1 overflows 64 bits");
  HermitianReport rep;
  rep.p = p;
  rep.n = n;
  rep.q = checked_pow(p, n);
  rep.g = checked_mul(rep.q, rep.q - 1) / 2;
  // p^n (p^{n-1} + 1)(p - 1) / 4
  rep.a = checked_mul(checked_mul(rep.q, checked_add(checked_pow(p, n - 1), 1)), p - 1) / 4;
  rep.zeta_numerator_exponent = rep.g;
  rep.points_q2 = checked_add(checked_pow(rep.q, 3), 1);

  const std::uint64_t modulus = (std::uint64_t{1} << n) + 1;
  if (modulus > (std::uint64_t{1} << 24)) throw std::overflow_error("orbit enumeration too large");
  std::vector<bool> seen(modulus, false);
  bool has_pair = false;
  for (std::uint64_t start = 1; start < modulus; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> orbit;
    for (std::uint64_t x = start; !seen[x]; x = (2 * x) % modulus) {
      seen[x] = true;
      orbit.push_back(x);
    }
    if (orbit.size() == 2) has_pair = true;
    rep.orbits.push_back(std::move(orbit));
  }
  rep.s = has_pair ? checked_pow(static_cast<std::uint64_t>(p) * (p - 1) / 2, n) : 0;
  rep.e_bound = rep.s;
  rep.superspecial = rep.s == rep.g;
  rep.ekedahl_ok = ekedahl_bound(p, rep.g);
  return rep;
}

bool ekedahl_bound(std::uint64_t p, std::uint64_t g) noexcept { return 2 * g <= p * (p - 1); }

}  // namespace dieudonne
