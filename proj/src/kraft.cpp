#include "dieudonne/kraft.hpp"

#include <algorithm>
#include <stdexcept>

#include "dieudonne/eo.hpp"
#include "dieudonne/error.hpp"

namespace dieudonne {

std::string least_rotation(std::string_view s) {
  std::string best(s);
  std::string doubled = std::string(s) + std::string(s);
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::string_view candidate(doubled.data() + r, s.size());
    if (candidate < best) best.assign(candidate);
  }
  return best;
}

CyclicWord::CyclicWord(std::string_view letters) {
  if (letters.empty()) throw std::invalid_argument("cyclic word must be nonempty");
  for (char c : letters)
    if (c != 'F' && c != 'V') throw std::invalid_argument("cyclic word letters must be F or V");
  letters_ = least_rotation(letters);
}

std::size_t CyclicWord::count(char letter) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

CyclicWord CyclicWord::swapped() const {
  std::string s = letters_;
  for (char& c : s) c = (c == 'F') ? 'V' : 'F';
  return CyclicWord(s);
}

std::size_t CyclicWord::f_runs() const noexcept {
  if (!has_both_letters()) return 0;
  std::size_t runs = 0;
  const std::size_t n = letters_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (letters_[i] == 'F' && letters_[(i + 1) % n] == 'V') ++runs;
  return runs;
}

std::size_t total_length(const WordCensus& c) {
  std::size_t n = 0;
  for (const auto& [w, mult] : c) n += w.size() * mult;
  return n;
}

std::string census_string(const WordCensus& c) {
  std::string out;
  for (const auto& [w, mult] : c) {
    for (std::size_t i = 0; i < mult; ++i) {
      if (!out.empty()) out += ';';
      out += w.str();
    }
  }
  return out;
}

CensusInvariants census_invariants(const WordCensus& c) {
  CensusInvariants inv;
  std::size_t etale = 0, multiplicative = 0;
  for (const auto& [w, mult] : c) {
    if (w.count('V') == 0) {
      etale += w.size() * mult;
    } else if (w.count('F') == 0) {
      multiplicative += w.size() * mult;
    } else {
      inv.a += w.f_runs() * mult;
    }
  }
  if (etale != multiplicative)
    throw ValidationError("census is not self-dual: etale and multiplicative parts differ");
  inv.f = etale;
  inv.g = total_length(c) / 2;
  if (auto it = c.find(CyclicWord("FV")); it != c.end()) inv.s = it->second;
  return inv;
}

DieudonneModule word_module(const CyclicWord& w, unsigned p) {
  const PrimeField k(p);
  const std::size_t n = w.size();
  Matrix F(k, n, n), V(k, n, n);
  const std::string& letters = w.str();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    if (letters[i] == 'F') {
      F.set(next, i, 1);
    } else {
      V.set(i, next, 1);
    }
  }
  return {std::move(F), std::move(V)};
}

CyclicWord symmetric_word(std::size_t g1, std::size_t a1) {
  if (a1 < 1 || a1 + 1 > g1)
    throw std::invalid_argument("symmetric word needs 1 <= a1 <= g1 - 1");
  const std::size_t run = g1 - a1 + 1;
  std::string s(run, 'F');
  for (std::size_t i = 1; i < a1; ++i) s += "VF";
  s.append(run, 'V');
  return CyclicWord(s);
}

namespace {

struct Edge {
  bool present = false;
  std::size_t target = 0;
};

std::vector<Edge> column_targets(const Matrix& m) {
  std::vector<Edge> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) out[c] = {true, r};
  return out;
}

}  // namespace

std::optional<std::vector<WordCycle>> walk_cycles(const DieudonneModule& m) {
  if (!is_monomial(m.F()) || !is_monomial(m.V())) return std::nullopt;
  const std::size_t n = m.dim();
  const auto f_edges = column_targets(m.F());
  const auto v_edges = column_targets(m.V());
  std::vector<Edge> v_preimage(n);
  for (std::size_t b = 0; b < n; ++b) {
    if (!v_edges[b].present) continue;
    Edge& slot = v_preimage[v_edges[b].target];
    if (slot.present) return std::nullopt;
    slot = {true, b};
  }
  // At node c: F(c) != 0 emits F and moves to F(c); otherwise emit V and move
  // to the unique V-preimage of c.
  std::vector<std::size_t> succ(n);
  std::string letter(n, '?');
  std::vector<int> indegree(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (f_edges[c].present) {
      if (v_preimage[c].present) return std::nullopt;
      succ[c] = f_edges[c].target;
      letter[c] = 'F';
    } else if (v_preimage[c].present) {
      succ[c] = v_preimage[c].target;
      letter[c] = 'V';
    } else {
      return std::nullopt;
    }
    if (++indegree[succ[c]] > 1) return std::nullopt;
  }
  std::vector<WordCycle> cycles;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    WordCycle cycle;
    for (std::size_t c = start; !seen[c]; c = succ[c]) {
      seen[c] = true;
      cycle.nodes.push_back(c);
      cycle.letters += letter[c];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

WordCensus census_of(const std::vector<WordCycle>& cycles) {
  WordCensus c;
  for (const auto& cycle : cycles) ++c[CyclicWord(cycle.letters)];
  return c;
}

}  // namespace

WordCensus decompose(const DieudonneModule& m) {
  if (m.dim() == 0) return {};
  if (auto cycles = walk_cycles(m)) return census_of(*cycles);
  require_bt1(m);
  const bool polarized = check_polarization(m) || find_polarization(m).has_value();
  if (!polarized)
    throw ValidationError("module is neither in word form nor quasipolarizable");
  const EOType t = eo_type_of(m);
  auto cycles = walk_cycles(canonical_matrices(t, m.field().p()));
  if (!cycles) throw std::logic_error("canonical module is not in word form");
  return census_of(*cycles);
}

std::size_t superspecial_rank(const DieudonneModule& m) {
  const auto census = decompose(m);
  auto it = census.find(CyclicWord("FV"));
  return it == census.end() ? 0 : it->second;
}

namespace {

// Index of the structure constant that a twist rescales: the first V-edge
// of the cycle, or its first F-edge when it has no V.
std::pair<char, std::pair<std::size_t, std::size_t>> twist_entry(const WordCycle& cycle) {
  const std::size_t n = cycle.nodes.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (cycle.letters[q] == 'V') {
      // V(nodes[q+1]) = nodes[q]
      return {'V', {cycle.nodes[q], cycle.nodes[(q + 1) % n]}};
    }
  }
  return {'F', {cycle.nodes[1 % n], cycle.nodes[0]}};
}

}  // namespace

DieudonneModule polarize_word_form(const DieudonneModule& m) {
  const PrimeField& k = m.field();
  if (m.dim() == 0) return m.with_form(Matrix(k, 0, 0));
  auto cycles = walk_cycles(m);
  if (!cycles) throw ValidationError("module is not in word form");

  std::vector<CyclicWord> words;
  for (const auto& c : *cycles) words.emplace_back(c.letters);

  // Pair each cycle with a partner carrying the dual word.
  std::vector<std::vector<std::size_t>> pieces;
  std::vector<bool> used(cycles->size(), false);
  for (std::size_t i = 0; i < cycles->size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const CyclicWord dual_word = words[i].swapped();
    if (dual_word == words[i]) {
      pieces.push_back({i});
      continue;
    }
    std::size_t j = i + 1;
    while (j < cycles->size() && (used[j] || !(words[j] == dual_word))) ++j;
    if (j == cycles->size())
      throw ValidationError("word " + words[i].str() + " has no dual partner; module is not self-dual");
    used[j] = true;
    pieces.push_back({i, j});
  }

  Matrix F = m.F(), V = m.V();
  Matrix G(k, m.dim(), m.dim());
  for (const auto& piece : pieces) {
    std::vector<std::size_t> nodes;
    for (auto ci : piece) nodes.insert(nodes.end(), (*cycles)[ci].nodes.begin(), (*cycles)[ci].nodes.end());
    const std::size_t len = nodes.size();

    const auto [op, rc] = twist_entry((*cycles)[piece.back()]);
    Matrix& twisted = (op == 'V') ? V : F;
    const Elem base = twisted(rc.first, rc.second);

    bool done = false;
    for (unsigned t = 1; t < k.p() && !done; ++t) {
      twisted.set(rc.first, rc.second, k.mul(base, static_cast<Elem>(t)));
      Matrix pf(k, len, len), pv(k, len, len);
      for (std::size_t a = 0; a < len; ++a)
        for (std::size_t b = 0; b < len; ++b) {
          pf.set(a, b, F(nodes[a], nodes[b]));
          pv.set(a, b, V(nodes[a], nodes[b]));
        }
      auto form = find_polarization(DieudonneModule(pf, pv));
      if (!form) continue;
      for (std::size_t a = 0; a < len; ++a)
        for (std::size_t b = 0; b < len; ++b) G.set(nodes[a], nodes[b], (*form)(a, b));
      done = true;
    }
    if (!done) {
      std::string label = words[piece.front()].str();
      if (piece.size() > 1) label += " + " + words[piece.back()].str();
      throw ValidationError("no quasipolarization found on component " + label);
    }
  }
  DieudonneModule out(std::move(F), std::move(V), std::move(G));
  if (!check_polarization(out)) throw std::logic_error("assembled form fails the polarization check");
  return out;
}

}  // namespace dieudonne
