#include "dieudonne/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "dieudonne/constructions.hpp"
#include "dieudonne/error.hpp"

namespace dieudonne {

using ojson = nlohmann::ordered_json;

namespace {

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(static_cast<int>(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const ojson& j, const PrimeField& k, std::size_t n, const char* name) {
  if (!j.is_array() || j.size() != n) throw std::invalid_argument(std::string(name) + " must have dim rows");
  Matrix m(k, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n) throw std::invalid_argument(std::string(name) + " must be square of size dim");
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_number_integer()) throw std::invalid_argument(std::string(name) + " entries must be integers");
      const long long v = row[c].get<long long>();
      if (v < 0 || v >= static_cast<long long>(k.p()))
        throw std::invalid_argument(std::string(name) + " entries must lie in [0, p)");
      m.set(r, c, v);
    }
  }
  return m;
}

ojson nu_json(const EOType& t) {
  ojson a = ojson::array();
  for (auto v : t.nu) a.push_back(v);
  return a;
}

ojson census_object(const WordCensus& c) {
  ojson o = ojson::object();
  for (const auto& [w, mult] : c) o[w.str()] = mult;
  return o;
}

// Census of a module when one is defined: word form is walked, otherwise a
// quasipolarizable module goes through its EO type.
std::optional<std::pair<WordCensus, std::optional<EOType>>> census_if_defined(const DieudonneModule& m) {
  if (walk_cycles(m)) {
    std::optional<EOType> t;
    if (m.dim() % 2 == 0 && (check_polarization(m) || find_polarization(m))) t = eo_type_of(m);
    return std::make_pair(decompose(m), t);
  }
  if (!(check_polarization(m) || find_polarization(m))) return std::nullopt;
  return std::make_pair(decompose(m), std::optional<EOType>(eo_type_of(m)));
}

}  // namespace

std::string module_to_json(const DieudonneModule& m) {
  ojson j;
  j["p"] = m.field().p();
  j["dim"] = m.dim();
  j["F"] = matrix_json(m.F());
  j["V"] = matrix_json(m.V());
  j["form"] = m.form() ? matrix_json(*m.form()) : ojson(nullptr);
  return j.dump();
}

DieudonneModule module_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed module JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("module JSON must be an object");
  for (const char* key : {"p", "dim", "F", "V"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("module JSON is missing '") + key + "'");
  if (!j["p"].is_number_unsigned() || !j["dim"].is_number_unsigned())
    throw std::invalid_argument("p and dim must be nonnegative integers");
  const PrimeField k(j["p"].get<unsigned>());
  const auto n = j["dim"].get<std::size_t>();
  Matrix F = matrix_from(j["F"], k, n, "F");
  Matrix V = matrix_from(j["V"], k, n, "V");
  std::optional<Matrix> form;
  if (j.contains("form") && !j["form"].is_null()) form = matrix_from(j["form"], k, n, "form");
  return {std::move(F), std::move(V), std::move(form)};
}

std::string census_to_json(const WordCensus& c) { return census_object(c).dump(); }

std::string invariants_json(const DieudonneModule& m) {
  const InvariantBundle inv = invariants(m);
  ojson j;
  j["g"] = inv.g;
  j["f"] = inv.f;
  j["a"] = inv.a;
  j["u"] = inv.u;
  j["s"] = nullptr;
  j["nu"] = nullptr;
  if (auto c = census_if_defined(m)) {
    j["s"] = census_invariants(c->first).s;
    if (c->second) j["nu"] = nu_json(*c->second);
  }
  return j.dump();
}

std::string decompose_json(const DieudonneModule& m) {
  const WordCensus c = decompose(m);
  const CensusInvariants inv = census_invariants(c);
  ojson j;
  j["g"] = inv.g;
  j["f"] = inv.f;
  j["a"] = inv.a;
  j["s"] = inv.s;
  j["words"] = census_object(c);
  return j.dump();
}

std::string check_json(const DieudonneModule& m, bool* valid) {
  const auto violations = validate_bt1(m);
  ojson j;
  j["valid"] = violations.empty();
  ojson list = ojson::array();
  for (const auto& v : violations) list.push_back({{"axiom", axiom_name(v.axiom)}, {"message", v.message}});
  j["violations"] = std::move(list);
  if (valid) *valid = violations.empty();
  return j.dump();
}

EOFilter parse_eo_filter(const std::string& text) {
  EOFilter out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("filter items look like f=1");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data() + eq + 1, item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("bad filter value in '" + item + "'");
    if (key == "f") out.f = value;
    else if (key == "a") out.a = value;
    else if (key == "s") out.s = value;
    else throw std::invalid_argument("unknown filter key '" + key + "'");
    pos = end + 1;
  }
  return out;
}

namespace {

struct TypeRow {
  EOType t;
  CensusInvariants inv;
  std::string words;
};

TypeRow describe(const EOType& t) {
  const WordCensus c = decompose(canonical_matrices(t));
  TypeRow row{t, census_invariants(c), census_string(c)};
  if (row.inv.f != f_of(t) || row.inv.a != a_of(t))
    throw std::logic_error("census disagrees with the EO formulas at [" + nu_string(t, ',') + "]");
  return row;
}

bool passes(const EOFilter& flt, const CensusInvariants& inv) {
  return (!flt.f || *flt.f == inv.f) && (!flt.a || *flt.a == inv.a) && (!flt.s || *flt.s == inv.s);
}

}  // namespace

std::string eo_list(std::size_t g, const EOFilter& filter, ListFormat format) {
  if (g > 24) throw std::invalid_argument("eo list supports g <= 24");
  std::ostringstream csv;
  ojson arr = ojson::array();
  if (format == ListFormat::Csv) csv << "nu,f,a,s\n";
  for_each_type(g, [&](const EOType& t) {
    const TypeRow row = describe(t);
    if (!passes(filter, row.inv)) return;
    if (format == ListFormat::Csv) {
      csv << nu_string(t) << ',' << row.inv.f << ',' << row.inv.a << ',' << row.inv.s << '\n';
    } else {
      arr.push_back({{"nu", nu_json(t)}, {"f", row.inv.f}, {"a", row.inv.a}, {"s", row.inv.s}});
    }
  });
  return format == ListFormat::Csv ? csv.str() : arr.dump();
}

std::string atlas_csv(std::size_t g_max, unsigned jobs) {
  if (g_max > 12) throw std::invalid_argument("atlas supports g_max <= 12");
  if (jobs == 0) jobs = 1;
  std::string out = "g,nu,f,a,s,words\n";
  for (std::size_t g = 1; g <= g_max; ++g) {
    const std::uint64_t count = std::uint64_t{1} << g;
    std::vector<std::string> rows(count);
    auto work = [&](unsigned worker) {
      for (std::uint64_t i = worker; i < count; i += jobs) {
        const TypeRow row = describe(type_at(g, i));
        rows[i] = std::to_string(g) + ',' + nu_string(row.t) + ',' + std::to_string(row.inv.f) + ',' +
                  std::to_string(row.inv.a) + ',' + std::to_string(row.inv.s) + ',' + row.words + '\n';
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(jobs);
      for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
          try {
            work(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (auto& r : rows) out += r;
  }
  return out;
}

std::string feasibility_json(std::size_t g) {
  if (g > 16) throw std::invalid_argument("feasibility table supports g <= 16");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> attained;
  for_each_type(g, [&](const EOType& t) {
    const TypeRow row = describe(t);
    attained[{row.inv.f, row.inv.a, row.inv.s}] = true;
  });
  ojson rows = ojson::array();
  for (std::size_t f = 0; f <= g; ++f)
    for (std::size_t a = 0; f + a <= g; ++a)
      for (std::size_t s = 0; s <= a; ++s) {
        const bool ok = feasible({g, f, a, s});
        rows.push_back({{"f", f}, {"a", a}, {"s", s}, {"feasible", ok}, {"attained", attained.count({f, a, s}) > 0}});
      }
  ojson j;
  j["g"] = g;
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string hyp2_json(const PoleDivisor& d, bool with_oracle) {
  const auto rep = hyp2_analyze(d);
  ojson j;
  j["poles"] = d.d;
  j["g"] = rep.g;
  j["r"] = rep.r;
  j["f"] = rep.f;
  j["c"] = rep.c;
  j["s"] = rep.s;
  j["s_bound"] = rep.s_bound;
  j["e_bound"] = rep.e_bound;
  ojson summands = ojson::array();
  for (const auto& t : rep.summands) summands.push_back(nu_json(t));
  j["summands"] = std::move(summands);
  if (with_oracle) {
    const DieudonneModule m = hyp2_module_oracle(d);
    const WordCensus c = decompose(m);
    const auto inv = census_invariants(c);
    j["oracle"] = {{"f", inv.f}, {"a", inv.a}, {"s", inv.s}, {"words", census_object(c)}, {"agrees", inv.s == rep.s && inv.f == rep.f}};
  }
  return j.dump();
}

std::string hermitian_json(unsigned p, unsigned n) {
  const auto rep = hermitian_analyze(p, n);
  ojson j;
  j["p"] = rep.p;
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["g"] = rep.g;
  j["a"] = rep.a;
  j["s"] = rep.s;
  j["e_bound"] = rep.e_bound;
  j["orbits"] = rep.orbits;
  j["zeta_numerator_exponent"] = rep.zeta_numerator_exponent;
  j["points_q2"] = rep.points_q2;
  j["superspecial"] = rep.superspecial;
  j["ekedahl_ok"] = rep.ekedahl_ok;
  return j.dump();
}

}  // namespace dieudonne
