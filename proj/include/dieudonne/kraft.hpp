#pragma once

// Cyclic words in {F, V} and the BT1 modules they index.
//
// A word L_1 ... L_n defines a module on z_1 ... z_n (indices cyclic):
// L_i = F gives F(z_i) = z_{i+1}, L_i = V gives V(z_{i+1}) = z_i, and every
// other value of F and V on the basis is zero. Modules whose F and V are
// monomial in some basis ("word form") decompose into such cycles by a
// graph walk.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dieudonne/module.hpp"

namespace dieudonne {

class CyclicWord {
 public:
  /// Parses a nonempty string over {F, V}; stores the least rotation.
  explicit CyclicWord(std::string_view letters);

  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t count(char letter) const noexcept;
  bool has_both_letters() const noexcept { return count('F') > 0 && count('V') > 0; }

  /// Letters swapped; the word of the Cartier dual.
  CyclicWord swapped() const;
  bool self_dual() const { return swapped() == *this; }
  /// Number of cyclic F-runs in a word with both letters, 0 otherwise.
  std::size_t f_runs() const noexcept;

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::string letters_;
};

/// Lexicographically least rotation with F < V.
std::string least_rotation(std::string_view s);

using WordCensus = std::map<CyclicWord, std::size_t>;

std::size_t total_length(const WordCensus& c);
/// "F;V" style listing, words in census order, repeated by multiplicity.
std::string census_string(const WordCensus& c);

struct CensusInvariants {
  std::size_t g = 0;
  std::size_t f = 0;
  std::size_t a = 0;
  std::size_t s = 0;
  friend bool operator==(const CensusInvariants&, const CensusInvariants&) = default;
};

/// f from the pure-F words (must match the pure-V words), a from F-runs,
/// s from the multiplicity of FV.
CensusInvariants census_invariants(const WordCensus& c);

DieudonneModule word_module(const CyclicWord& w, unsigned p = 2);

/// F^{g1-a1+1} (VF)^{a1-1} V^{g1-a1+1}; requires 1 <= a1 <= g1 - 1.
CyclicWord symmetric_word(std::size_t g1, std::size_t a1);

/// One cycle of a word-form module: basis indices in walk order and the
/// letter emitted at each.
struct WordCycle {
  std::vector<std::size_t> nodes;
  std::string letters;
};

/// Walks a word-form module. Returns nullopt if F or V is not monomial or
/// the walk is not a permutation of the basis.
std::optional<std::vector<WordCycle>> walk_cycles(const DieudonneModule& m);

/// Word census of a module. Word-form input is walked directly; anything
/// else must be quasipolarizable and goes through its Ekedahl-Oort type.
WordCensus decompose(const DieudonneModule& m);

/// Polarized superspecial rank: multiplicity of FV in decompose(m).
std::size_t superspecial_rank(const DieudonneModule& m);

/// Attaches a quasipolarization to a self-dual word-form module. Cycles are
/// paired with their duals and each piece is polarized separately; for odd p
/// one structure constant per piece may be rescaled, which leaves the module
/// unchanged over an algebraically closed field. Throws ValidationError if
/// no polarization is found.
DieudonneModule polarize_word_form(const DieudonneModule& m);

}  // namespace dieudonne
