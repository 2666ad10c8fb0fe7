#include "dieudonne/eo.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "dieudonne/error.hpp"
#include "dieudonne/kraft.hpp"

namespace dieudonne {

bool validate(const EOType& t) noexcept {
  if (t.nu.empty()) return true;
  if (t.nu[0] > 1) return false;
  for (std::size_t i = 1; i < t.nu.size(); ++i)
    if (t.nu[i] < t.nu[i - 1] || t.nu[i] > t.nu[i - 1] + 1) return false;
  return true;
}

void require_valid(const EOType& t) {
  if (!validate(t)) throw std::invalid_argument("invalid Ekedahl-Oort type [" + nu_string(t, ',') + "]");
}

EOType type_at(std::size_t g, std::uint64_t index) {
  // Bit g-1-i of index is the step nu_{i+1} - nu_i (nu_0 = 0).
  EOType t;
  t.nu.resize(g);
  std::size_t level = 0;
  for (std::size_t i = 0; i < g; ++i) {
    level += (index >> (g - 1 - i)) & 1u;
    t.nu[i] = level;
  }
  return t;
}

void for_each_type(std::size_t g, const std::function<void(const EOType&)>& fn) {
  if (g >= 63) throw std::invalid_argument("g too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << g;
  for (std::uint64_t i = 0; i < count; ++i) fn(type_at(g, i));
}

std::vector<EOType> enumerate(std::size_t g) {
  std::vector<EOType> out;
  for_each_type(g, [&](const EOType& t) { out.push_back(t); });
  return out;
}

std::size_t f_of(const EOType& t) {
  std::size_t f = 0;
  for (std::size_t i = 1; i <= t.g(); ++i)
    if (t.nu[i - 1] == i) f = i;
  return f;
}

std::size_t a_of(const EOType& t) { return t.g() == 0 ? 0 : t.g() - t.nu.back(); }

std::vector<std::size_t> extend_final(const EOType& t) {
  require_valid(t);
  const std::size_t g = t.g();
  std::vector<std::size_t> psi(2 * g + 1, 0);
  for (std::size_t i = 1; i <= g; ++i) psi[i] = t.nu[i - 1];
  for (std::size_t i = g + 1; i <= 2 * g; ++i) psi[i] = psi[2 * g - i] + i - g;
  return psi;
}

DieudonneModule canonical_matrices(const EOType& t, unsigned p) {
  const PrimeField k(p);
  const auto psi = extend_final(t);
  const std::size_t g = t.g(), n = 2 * g;
  Matrix F(k, n, n), V(k, n, n);
  std::vector<std::size_t> flat;  // K: indices where psi does not jump
  for (std::size_t i = 1; i <= n; ++i) {
    if (psi[i] > psi[i - 1]) {
      V.set(psi[i] - 1, i - 1, 1);
    } else {
      flat.push_back(i);
    }
  }
  if (flat.size() != g) throw std::logic_error("final type has the wrong number of flat steps");
  for (std::size_t m = 1; m <= g; ++m) F.set(flat[m - 1] - 1, g + m - 1, 1);
  DieudonneModule out(std::move(F), std::move(V));
  if (auto v = validate_bt1(out); !v.empty())
    throw std::logic_error("canonical module violates " + v.front().message);
  return out;
}

DieudonneModule canonical_module(const EOType& t, unsigned p) {
  return polarize_word_form(canonical_matrices(t, p));
}

std::vector<Subspace> canonical_filtration(const DieudonneModule& m) {
  require_bt1(m);
  const PrimeField& k = m.field();
  const std::size_t n = m.dim();
  if (n == 0) return {Subspace::zero(k, 0)};
  std::vector<Subspace> members{Subspace::zero(k, n), Subspace::full(k, n)};
  auto known = [&](const Subspace& s) {
    return std::find(members.begin(), members.end(), s) != members.end();
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    // members grows while we scan; every new member is visited in turn.
    Subspace by_v = members[i].mapped(m.V());
    Subspace by_f = preimage(m.F(), members[i]);
    for (auto* s : {&by_v, &by_f}) {
      if (!known(*s)) {
        members.push_back(std::move(*s));
        if (members.size() > n + 1) throw ValidationError("canonical filtration is not a flag");
      }
    }
  }
  std::sort(members.begin(), members.end(),
            [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].dim() == members[i - 1].dim() || !contains(members[i], members[i - 1]))
      throw ValidationError("canonical filtration is not a flag");
  return members;
}

EOType eo_type_of(const DieudonneModule& m) {
  if (m.dim() % 2 != 0) throw ValidationError("module of odd dimension has no Ekedahl-Oort type");
  const auto chain = canonical_filtration(m);
  const std::size_t g = m.g();
  std::vector<std::size_t> dims, vdims;
  for (const auto& s : chain) {
    dims.push_back(s.dim());
    vdims.push_back(s.mapped(m.V()).dim());
  }
  EOType t;
  t.nu.resize(g);
  for (std::size_t i = 1; i <= g; ++i) {
    // Bracket i between consecutive canonical members lo <= i <= hi.
    std::size_t hi = 0;
    while (dims[hi] < i) ++hi;
    if (dims[hi] == i) {
      t.nu[i - 1] = vdims[hi];
      continue;
    }
    const std::size_t lo = hi - 1;
    const std::size_t jump = vdims[hi] - vdims[lo];
    if (jump == 0) {
      t.nu[i - 1] = vdims[lo];
    } else if (jump == dims[hi] - dims[lo]) {
      t.nu[i - 1] = vdims[lo] + (i - dims[lo]);
    } else {
      throw ValidationError("canonical filtration step has a partial V-rank jump");
    }
  }
  if (!validate(t)) throw ValidationError("extracted sequence is not an Ekedahl-Oort type");
  return t;
}

std::string nu_string(const EOType& t, char sep) {
  std::string out;
  for (std::size_t i = 0; i < t.nu.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(t.nu[i]);
  }
  return out;
}

EOType parse_nu(const std::string& text) {
  EOType t;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of(",;", pos);
    if (end == std::string::npos) end = text.size();
    std::size_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw std::invalid_argument("bad EO type entry in '" + text + "'");
    t.nu.push_back(value);
    pos = end + 1;
  }
  require_valid(t);
  return t;
}

}  // namespace dieudonne
