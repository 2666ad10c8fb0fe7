#include "dieudonne/dieudonne.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dieudonne/constructions.hpp"
#include "dieudonne/error.hpp"
#include "dieudonne/serialize.hpp"

struct dd_module {
  dieudonne::DieudonneModule value;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
dd_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return DD_OK;
  } catch (const dieudonne::InfeasibleError& e) {
    last_error = e.what();
    return DD_INFEASIBLE;
  } catch (const dieudonne::ValidationError& e) {
    last_error = e.what();
    return DD_VALIDATION;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return DD_USAGE;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return DD_USAGE;
  } catch (const std::overflow_error& e) {
    last_error = e.what();
    return DD_USAGE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DD_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DD_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DD_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Make>
dd_status make_module(dd_module** out, Make&& make) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new dd_module{make()};
  });
}

template <typename Make>
dd_status make_string(char** out, Make&& make) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = copy_out(make());
  });
}

const dieudonne::DieudonneModule& get(const dd_module* m) {
  require(m != nullptr, "module is null");
  return m->value;
}

}  // namespace

extern "C" {

const char* dd_last_error(void) { return last_error.c_str(); }

void dd_string_free(char* s) { std::free(s); }

void dd_module_free(dd_module* m) { delete m; }

dd_status dd_module_from_json(const char* json, dd_module** out) {
  return make_module(out, [&] {
    require(json != nullptr, "json is null");
    return dieudonne::module_from_json(json);
  });
}

dd_status dd_module_to_json(const dd_module* m, char** out) {
  return make_string(out, [&] { return dieudonne::module_to_json(get(m)); });
}

dd_status dd_module_dim(const dd_module* m, size_t* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = get(m).dim();
  });
}

dd_status dd_module_from_eo(const char* nu, unsigned p, dd_module** out) {
  return make_module(out, [&] {
    require(nu != nullptr, "nu is null");
    return dieudonne::canonical_module(dieudonne::parse_nu(nu), p);
  });
}

dd_status dd_module_from_word(const char* word, unsigned p, dd_module** out) {
  return make_module(out, [&] {
    require(word != nullptr, "word is null");
    return dieudonne::word_module(dieudonne::CyclicWord(word), p);
  });
}

dd_status dd_module_i11(unsigned p, dd_module** out) {
  return make_module(out, [&] { return dieudonne::i11(p); });
}

dd_status dd_module_ord1(unsigned p, dd_module** out) {
  return make_module(out, [&] { return dieudonne::ord1(p); });
}

dd_status dd_module_jrs(size_t r, size_t s, unsigned p, dd_module** out) {
  return make_module(out, [&] { return dieudonne::j_rs(r, s, p); });
}

dd_status dd_module_hrs(size_t r, size_t s, unsigned p, dd_module** out) {
  return make_module(out, [&] { return dieudonne::h_rs(r, s, p); });
}

dd_status dd_module_profile(size_t g, size_t f, size_t a, size_t s, unsigned p, dd_module** out) {
  return make_module(out, [&] { return dieudonne::realize({g, f, a, s}, p); });
}

dd_status dd_module_supersingular(size_t g, size_t s, unsigned p, dd_module** out) {
  return make_module(out, [&] { return dieudonne::supersingular_profile(g, s, p); });
}

dd_status dd_module_direct_sum(const dd_module* a, const dd_module* b, dd_module** out) {
  return make_module(out, [&] {
    const auto& x = get(a);
    const auto& y = get(b);
    require(x.field() == y.field(), "direct sum needs a common field");
    return dieudonne::direct_sum(x, y);
  });
}

dd_status dd_module_dual(const dd_module* m, dd_module** out) {
  return make_module(out, [&] { return dieudonne::dual(get(m)); });
}

dd_status dd_module_polarize(const dd_module* m, dd_module** out) {
  return make_module(out, [&] {
    const auto& x = get(m);
    dieudonne::require_bt1(x.without_form());
    auto form = dieudonne::find_polarization(x);
    if (!form) throw dieudonne::ValidationError("no compatible nondegenerate alternating form found");
    return x.with_form(*form);
  });
}

dd_status dd_module_invariants(const dd_module* m, dd_invariants* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto& x = get(m);
    const auto inv = dieudonne::invariants(x);
    dd_invariants r{inv.g, inv.f, inv.a, inv.u, 0, 0};
    if (dieudonne::walk_cycles(x) || dieudonne::check_polarization(x) || dieudonne::find_polarization(x)) {
      r.has_s = 1;
      r.s = dieudonne::superspecial_rank(x);
    }
    *out = r;
  });
}

dd_status dd_invariants_json(const dd_module* m, char** out) {
  return make_string(out, [&] { return dieudonne::invariants_json(get(m)); });
}

dd_status dd_decompose_json(const dd_module* m, char** out) {
  return make_string(out, [&] { return dieudonne::decompose_json(get(m)); });
}

dd_status dd_check_json(const dd_module* m, char** out) {
  bool valid = false;
  const dd_status st = make_string(out, [&] { return dieudonne::check_json(get(m), &valid); });
  if (st != DD_OK) return st;
  if (!valid) {
    last_error = "module violates the BT1 axioms";
    return DD_VALIDATION;
  }
  return DD_OK;
}

dd_status dd_eo_type_json(const dd_module* m, char** out) {
  return make_string(out, [&] {
    const auto t = dieudonne::eo_type_of(get(m));
    return "[" + dieudonne::nu_string(t, ',') + "]";
  });
}

dd_status dd_eo_list(size_t g, const char* filter, const char* format, char** out) {
  return make_string(out, [&] {
    const auto flt = filter ? dieudonne::parse_eo_filter(filter) : dieudonne::EOFilter{};
    const std::string fmt = format ? format : "json";
    dieudonne::ListFormat lf;
    if (fmt == "json") lf = dieudonne::ListFormat::Json;
    else if (fmt == "csv") lf = dieudonne::ListFormat::Csv;
    else throw std::invalid_argument("format must be json or csv");
    return dieudonne::eo_list(g, flt, lf);
  });
}

dd_status dd_eo_count(size_t g, unsigned long long* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    unsigned long long n = 0;
    dieudonne::for_each_type(g, [&](const dieudonne::EOType& t) {
      if (dieudonne::validate(t)) ++n;
    });
    *out = n;
  });
}

dd_status dd_atlas_csv(size_t g_max, unsigned jobs, char** out) {
  return make_string(out, [&] { return dieudonne::atlas_csv(g_max, jobs); });
}

dd_status dd_feasibility_json(size_t g, char** out) {
  return make_string(out, [&] { return dieudonne::feasibility_json(g); });
}

dd_status dd_hyp2_json(const char* poles, int with_oracle, char** out) {
  return make_string(out, [&] {
    require(poles != nullptr, "poles is null");
    return dieudonne::hyp2_json(dieudonne::parse_poles(poles), with_oracle != 0);
  });
}

dd_status dd_hermitian_json(unsigned p, unsigned n, char** out) {
  return make_string(out, [&] { return dieudonne::hermitian_json(p, n); });
}

}  // extern "C"
