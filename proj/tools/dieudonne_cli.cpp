// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dieudonne/dieudonne.h"

namespace {

int report(dd_status st) {
  if (st != DD_OK) std::cerr << "error: " << dd_last_error() << '\n';
  return static_cast<int>(st);
}

// Prints and frees a returned string.
int emit(dd_status st, char* text, bool newline = true) {
  if (text) {
    std::cout << text;
    if (newline) std::cout << '\n';
    dd_string_free(text);
  }
  return report(st);
}

// Takes the slot's address: the status argument is what fills it.
int emit_module(dd_status st, dd_module** slot) {
  if (st != DD_OK) return report(st);
  dd_module* m = *slot;
  char* text = nullptr;
  st = dd_module_to_json(m, &text);
  dd_module_free(m);
  return emit(st, text);
}

bool read_file(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Loads --in FILE into a module; returns an exit code on failure.
int load_module(const std::string& path, dd_module** m) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << '\n';
    return DD_USAGE;
  }
  return report(dd_module_from_json(text.c_str(), m));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mod-p Dieudonne modules of BT1 group schemes"};
  app.require_subcommand(1);
  int code = 0;

  unsigned p = 2;
  std::size_t g = 0, f = 0, a = 0, s = 0, r = 0;

  auto* eo = app.add_subcommand("eo", "Ekedahl-Oort types")->require_subcommand(1);
  std::string filter, format = "json", nu;
  auto* eo_list = eo->add_subcommand("list", "enumerate all types of length g");
  eo_list->add_option("--g", g, "length")->required();
  eo_list->add_option("--filter", filter, "e.g. f=0,a=2,s=1");
  eo_list->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  eo_list->callback([&] {
    char* out = nullptr;
    const dd_status st = dd_eo_list(g, filter.empty() ? nullptr : filter.c_str(), format.c_str(), &out);
    code = emit(st, out, format == "json");
  });
  auto* eo_module = eo->add_subcommand("module", "canonical module of a type");
  eo_module->add_option("--nu", nu, "e.g. 0,1,1")->required();
  eo_module->add_option("--p", p, "prime");
  eo_module->callback([&] {
    dd_module* m = nullptr;
    code = emit_module(dd_module_from_eo(nu.c_str(), p, &m), &m);
  });

  auto* mod = app.add_subcommand("module", "analyse a module given as JSON")->require_subcommand(1);
  std::string in_path;
  auto add_in = [&](CLI::App* cmd) { cmd->add_option("--in", in_path, "module JSON file, - for stdin")->required(); };
  auto with_module = [&](auto&& fn) {
    return [&, fn] {
      dd_module* m = nullptr;
      if (int c = load_module(in_path, &m)) {
        code = c;
        return;
      }
      code = fn(m);
      dd_module_free(m);
    };
  };
  auto* m_inv = mod->add_subcommand("invariants", "g, f, a, u, s and the EO type");
  add_in(m_inv);
  m_inv->callback(with_module([](dd_module* m) {
    char* out = nullptr;
    const dd_status st = dd_invariants_json(m, &out);
    return emit(st, out);
  }));
  auto* m_dec = mod->add_subcommand("decompose", "word census");
  add_in(m_dec);
  m_dec->callback(with_module([](dd_module* m) {
    char* out = nullptr;
    const dd_status st = dd_decompose_json(m, &out);
    return emit(st, out);
  }));
  auto* m_chk = mod->add_subcommand("check", "BT1 and form axioms");
  add_in(m_chk);
  m_chk->callback(with_module([](dd_module* m) {
    char* out = nullptr;
    const dd_status st = dd_check_json(m, &out);
    return emit(st, out);
  }));
  auto* m_pol = mod->add_subcommand("polarize", "attach a quasipolarization");
  add_in(m_pol);
  m_pol->callback(with_module([](dd_module* m) {
    dd_module* out = nullptr;
    return emit_module(dd_module_polarize(m, &out), &out);
  }));

  auto* build = app.add_subcommand("build", "construct modules")->require_subcommand(1);
  std::string word;
  auto* b_word = build->add_subcommand("word", "module of a cyclic word");
  b_word->add_option("--w", word, "word over F, V")->required();
  b_word->add_option("--p", p, "prime");
  b_word->callback([&] {
    dd_module* m = nullptr;
    code = emit_module(dd_module_from_word(word.c_str(), p, &m), &m);
  });
  auto* b_jrs = build->add_subcommand("jrs", "E/E(F^r + V^s)");
  auto* b_hrs = build->add_subcommand("hrs", "J_{r,s} + J_{s,r} with its form");
  for (auto* cmd : {b_jrs, b_hrs}) {
    cmd->add_option("--r", r, "F-length")->required();
    cmd->add_option("--s", s, "V-length")->required();
    cmd->add_option("--p", p, "prime");
  }
  b_jrs->callback([&] {
    dd_module* m = nullptr;
    code = emit_module(dd_module_jrs(r, s, p, &m), &m);
  });
  b_hrs->callback([&] {
    dd_module* m = nullptr;
    code = emit_module(dd_module_hrs(r, s, p, &m), &m);
  });
  auto* b_prof = build->add_subcommand("profile", "module with given g, f, a, s");
  b_prof->add_option("--g", g, "dimension")->required();
  b_prof->add_option("--f", f, "p-rank")->required();
  b_prof->add_option("--a", a, "a-number")->required();
  b_prof->add_option("--s", s, "superspecial rank")->required();
  b_prof->add_option("--p", p, "prime");
  b_prof->callback([&] {
    dd_module* m = nullptr;
    code = emit_module(dd_module_profile(g, f, a, s, p, &m), &m);
  });
  auto* b_ss = build->add_subcommand("ss", "supersingular module with superspecial rank s");
  b_ss->add_option("--g", g, "dimension")->required();
  b_ss->add_option("--s", s, "superspecial rank")->required();
  b_ss->add_option("--p", p, "prime");
  b_ss->callback([&] {
    dd_module* m = nullptr;
    code = emit_module(dd_module_supersingular(g, s, p, &m), &m);
  });

  auto* curve = app.add_subcommand("curve", "curve reports")->require_subcommand(1);
  std::string poles;
  bool oracle = false;
  unsigned n = 1;
  auto* c_hyp = curve->add_subcommand("hyp2", "y^2 + y = h(x) in characteristic 2");
  c_hyp->add_option("--poles", poles, "odd pole orders, e.g. 3,9")->required();
  c_hyp->add_flag("--oracle", oracle, "cross-check through the module decomposition");
  c_hyp->callback([&] {
    char* out = nullptr;
    const dd_status st = dd_hyp2_json(poles.c_str(), oracle ? 1 : 0, &out);
    code = emit(st, out);
  });
  auto* c_her = curve->add_subcommand("hermitian", "y^q + y = x^{q+1}, q = p^n");
  c_her->add_option("--p", p, "characteristic")->required();
  c_her->add_option("--n", n, "q = p^n")->required();
  c_her->callback([&] {
    char* out = nullptr;
    const dd_status st = dd_hermitian_json(p, n, &out);
    code = emit(st, out);
  });

  auto* table = app.add_subcommand("table", "tables")->require_subcommand(1);
  auto* t_feas = table->add_subcommand("feasibility", "(f, a, s) feasibility for genus g");
  t_feas->add_option("--g", g, "dimension")->required();
  t_feas->callback([&] {
    char* out = nullptr;
    const dd_status st = dd_feasibility_json(g, &out);
    code = emit(st, out);
  });
  std::size_t g_max = 0;
  unsigned jobs = 1;
  std::string out_path;
  auto* t_atlas = table->add_subcommand("atlas", "CSV of all types up to g_max");
  t_atlas->add_option("--g-max", g_max, "largest g, at most 12")->required();
  t_atlas->add_option("--out", out_path, "output file (default stdout)");
  t_atlas->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  t_atlas->callback([&] {
    char* out = nullptr;
    const dd_status st = dd_atlas_csv(g_max, jobs, &out);
    if (st != DD_OK || out_path.empty()) {
      code = emit(st, out, false);
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << out;
    dd_string_free(out);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      code = DD_USAGE;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return DD_USAGE;
  }
  return code;
}
