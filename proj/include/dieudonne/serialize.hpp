#pragma once

// Text forms: module JSON, census JSON, EO lists, the atlas CSV and the
// curve / feasibility reports. All output is deterministic.

#include <cstddef>
#include <optional>
#include <string>

#include "dieudonne/curves.hpp"
#include "dieudonne/eo.hpp"
#include "dieudonne/kraft.hpp"
#include "dieudonne/module.hpp"

namespace dieudonne {

/// {"p":..,"dim":..,"F":[[..]],"V":[[..]],"form":null|[[..]]}, compact.
std::string module_to_json(const DieudonneModule& m);
/// Throws std::invalid_argument on malformed input or entries outside [0, p).
DieudonneModule module_from_json(const std::string& text);

std::string census_to_json(const WordCensus& c);

/// g, f, a, u always; s and nu when the module is in word form or
/// quasipolarizable, null otherwise.
std::string invariants_json(const DieudonneModule& m);
/// Word census plus its invariants.
std::string decompose_json(const DieudonneModule& m);
/// {"valid":..,"violations":[{"axiom":..,"message":..}]}.
std::string check_json(const DieudonneModule& m, bool* valid = nullptr);

struct EOFilter {
  std::optional<std::size_t> f, a, s;
};
/// Parses "f=1,a=2,s=0" (any subset, any order).
EOFilter parse_eo_filter(const std::string& text);

enum class ListFormat { Json, Csv };
std::string eo_list(std::size_t g, const EOFilter& filter, ListFormat format);

/// Header g,nu,f,a,s,words; g ascending, nu in enumeration order.
/// jobs only affects wall-clock time.
std::string atlas_csv(std::size_t g_max, unsigned jobs = 1);

/// Every (f, a, s) with f + a <= g and s <= a, whether it is feasible and
/// whether some EO type of length g attains it.
std::string feasibility_json(std::size_t g);

std::string hyp2_json(const PoleDivisor& d, bool with_oracle);
std::string hermitian_json(unsigned p, unsigned n);

}  // namespace dieudonne
