// Command-line front end. Talks to the library only through cocenter.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cocenter.h"

using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kSuiteFailed = 1, kBadInput = 2, kLogic = 3, kResource = 4 };

// Captured at throw time: unwinding may run library calls that reset the thread's error.
struct Failure {
  cc_status status;
  std::string message;
  std::string production;
};

int exit_code(cc_status s) {
  switch (s) {
    case CC_OK: return kOk;
    case CC_ERR_PARSE:
    case CC_ERR_CONFIG:
    case CC_ERR_INPUT: return kBadInput;
    case CC_ERR_RESOURCE: return kResource;
    default: return kLogic;
  }
}

void check(cc_status s) {
  if (s != CC_OK) throw Failure{s, cc_last_error(), cc_last_error_production()};
}

// Owns a string handed out by the library.
Json take_json(char* s) {
  Json j = Json::parse(s);
  cc_string_free(s);
  return j;
}

struct Options {
  std::string group = "A1";
  std::string lattice = "sc";
  std::string config;
  bool json = false;
  bool tsv = false;
  std::uint64_t seed = 0;
  int jobs = 1;
  int length = -1;
  std::string v;
  std::vector<std::string> omega;
  int cap = 0;
};

struct Group {
  cc_group* h = nullptr;
  ~Group() {
    if (h) {
      cc_group_save_cache(h);
      cc_group_free(h);
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read config file " << path << "\n";
    throw Failure{CC_ERR_CONFIG, "", ""};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void open_group(const Options& o, Group& g) {
  if (!o.config.empty())
    check(cc_group_from_config(read_file(o.config).c_str(), &g.h));
  else
    check(cc_group_create(o.group.c_str(), o.lattice.c_str(), &g.h));
  if (o.cap > 0) check(cc_group_set_cap(g.h, o.cap));
  if (const char* dir = std::getenv("NEWTON_COCENTER_CACHE")) check(cc_group_attach_cache(g.h, dir));
}

// "2/1" -> "2", "0/1" -> "0"
std::string pretty(const std::string& pq) {
  auto slash = pq.find('/');
  if (slash != std::string::npos && pq.substr(slash + 1) == "1") return pq.substr(0, slash);
  return pq;
}

std::string coweight(const Json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + pretty(a[i].get<std::string>());
  return s + ")";
}

void print_normal_form(const Json& nf) {
  if (nf.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [key, c] : nf.items()) {
    std::cout << key << "\n";
    for (const auto& t : c["terms"]) std::cout << "  (" << t["poly"].get<std::string>() << ") * T[" << t["elem"].get<std::string>() << "]\n";
  }
}

// ----------------------------------------------------------------------------------------------

int cmd_describe(const Options& o) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_describe(g.h, &out));
  Json j = take_json(out);
  if (o.json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "group " << j["group"].get<std::string>() << " (" << j["lattice"].get<std::string>() << "), rank "
            << j["dim"] << ", semisimple rank " << j["semisimple_rank"] << "\n";
  std::cout << "roots " << j["roots"] << ", |W0| " << j["weyl_order"] << ", Omega " << j["omega"].get<std::string>()
            << ", ball cap " << j["ball_cap"] << "\n";
  for (const auto& s : j["simple_reflections"])
    std::cout << "  " << s["name"].get<std::string>() << " = " << s["elem"].get<std::string>() << "  affine root "
              << s["affine_root"]["root"].dump() << " level " << s["affine_root"]["level"] << "\n";
  return kOk;
}

int cmd_newton(const Options& o, const std::vector<std::string>& elems) {
  Group g;
  open_group(o, g);
  if (o.tsv) std::cout << "elem\tlength\tkappa\tnewton\tnu_bar\tstraight\n";
  for (const auto& e : elems) {
    char* out = nullptr;
    check(cc_element_info(g.h, e.c_str(), &out));
    Json j = take_json(out);
    if (o.json) {
      std::cout << j.dump() << "\n";
    } else if (o.tsv) {
      std::cout << j["elem"].get<std::string>() << "\t" << j["length"] << "\t" << j["kappa"].get<std::string>() << "\t"
                << coweight(j["newton"]) << "\t" << coweight(j["nu_bar"]) << "\t" << (j["straight"].get<bool>() ? "yes" : "no")
                << "\n";
    } else {
      std::cout << j["elem"].get<std::string>() << "  [" << j["word"].get<std::string>() << "]\n"
                << "  length " << j["length"] << ", kappa " << j["kappa"].get<std::string>() << "\n"
                << "  nu = " << coweight(j["newton"]) << "\n"
                << "  nu_bar = " << coweight(j["nu_bar"]) << "\n"
                << "  straight: " << (j["straight"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  return kOk;
}

int cmd_strata(const Options& o) {
  Group g;
  open_group(o, g);
  std::string labels;
  for (const auto& l : o.omega) labels += (labels.empty() ? "" : ";") + l;
  char* out = nullptr;
  check(cc_strata(g.h, o.length < 0 ? 4 : o.length, labels.empty() ? nullptr : labels.c_str(), &out));
  Json j = take_json(out);
  if (o.json) {
    for (const auto& r : j["strata"]) std::cout << r.dump() << "\n";
    return kOk;
  }
  if (o.tsv) std::cout << "kappa\tnu\tcount\n";
  for (const auto& r : j["strata"]) {
    if (o.tsv) {
      std::cout << r["kappa"].get<std::string>() << "\t" << coweight(r["nu"]) << "\t" << r["count"] << "\n";
      continue;
    }
    std::cout << "kappa=" << r["kappa"].get<std::string>() << " nu=" << coweight(r["nu"]) << "  count " << r["count"] << "\n";
    for (const auto& e : r["elements"]) std::cout << "  " << e.get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_reduce(const Options& o, const std::string& elem) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_reduce(g.h, elem.c_str(), &out));
  Json j = take_json(out);
  if (o.json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "start " << j["start"].get<std::string>() << "\n";
  for (const auto& s : j["steps"])
    std::cout << "  " << s["kind"].get<std::string>() << " by " << s["s"].get<std::string>() << " -> "
              << s["result"].get<std::string>() << "  [" << s["word"].get<std::string>() << "] length " << s["length"]
              << "\n";
  std::cout << "end " << j["end"].get<std::string>() << "  [" << j["end_word"].get<std::string>() << "] length "
            << j["end_length"] << " (" << j["steps"].size() << " steps, bound " << j["path_bound"] << ")\n";
  return kOk;
}

int cmd_triple(const Options& o, const std::string& elem) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_triple(g.h, elem.c_str(), &out));
  Json j = take_json(out);
  if (o.json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::string K;
  for (const auto& s : j["K"]) K += (K.empty() ? "" : ",") + s.get<std::string>();
  std::cout << "minimal " << j["minimal"].get<std::string>() << "\n"
            << "  x = " << j["x"].get<std::string>() << (j["x_straight"].get<bool>() ? " (straight)" : "") << "\n"
            << "  K = {" << K << "}\n"
            << "  u = " << j["u"].get<std::string>() << "\n"
            << "  y = u x = " << j["y"].get<std::string>() << "\n"
            << "  nu_bar = " << coweight(j["newton"]) << "\n";
  return kOk;
}

std::string need_v(const Options& o) {
  if (o.v.empty()) {
    std::cerr << "error: --v <coweight> is required\n";
    throw Failure{CC_ERR_INPUT, "", ""};
  }
  return o.v;
}

int cmd_alcove(const Options& o, const std::string& elem) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_alcove_test(g.h, elem.c_str(), need_v(o).c_str(), &out));
  Json j = take_json(out);
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << j["elem"].get<std::string>() << " is " << (j["alcove"].get<bool>() ? "" : "not ") << "a "
              << coweight(j["v"]) << "-alcove element" << (j["minimal"].get<bool>() ? " (minimal length)" : "") << "\n";
  return kOk;
}

int cmd_positivity(const Options& o, const std::string& elem) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_positivity(g.h, elem.c_str(), need_v(o).c_str(), &out));
  Json j = take_json(out);
  if (o.json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << j["elem"].get<std::string>() << " in " << j["levi"].get<std::string>() << ", v = " << coweight(j["v"]) << "\n"
            << "  exponent " << j["exponent"] << " (bound (2*" << j["n0"] << "+" << j["n1"] << "+1)*" << j["i"] << " = "
            << j["exponent_bound"] << ")\n"
            << "  first power positive: " << (j["first_power_positive"].get<bool>() ? "yes" : "no") << "\n";
  if (j.contains("witness_root"))
    std::cout << "  witness root " << j["witness_root"].dump() << " shift " << j["witness_shift"] << "\n";
  return kOk;
}

int cmd_levi(const Options& o, const std::string& action) {
  if (action != "describe") {
    std::cerr << "error: unknown levi action '" << action << "'\n";
    return kBadInput;
  }
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_levi_describe(g.h, need_v(o).c_str(), &out));
  Json j = take_json(out);
  if (o.json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "M_v = " << j["label"].get<std::string>() << " for v = " << coweight(j["v"]) << "\n"
            << "  simple roots " << j["simple_roots"].dump() << "\n"
            << "  roots of M " << j["roots"] << ", roots of G positive on v " << j["plus_roots"] << ", |W_M| " << j["weyl_order"]
            << ", Omega_M " << j["omega"].get<std::string>() << "\n"
            << "  max |W_K| over finite K: " << j["max_finite_parabolic"] << "\n";
  return kOk;
}

int cmd_cocenter_reduce(const Options& o, const std::string& expr) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_cocenter_reduce(g.h, expr.c_str(), &out));
  Json j = take_json(out);
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    print_normal_form(j);
  return kOk;
}

int cmd_induce(const Options& o, const std::string& expr) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_induce(g.h, need_v(o).c_str(), expr.c_str(), &out));
  Json j = take_json(out);
  if (o.json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "M = " << j["levi"].get<std::string>() << ", nu_M: kappa=" << j["nu_m"]["omega"].get<std::string>()
            << " nu=" << coweight(j["nu_m"]["nu"]) << " -> " << j["target"].get<std::string>() << "\n";
  print_normal_form(j["normal_form"]);
  return kOk;
}

int cmd_rigid(const Options& o) {
  Group g;
  open_group(o, g);
  char* out = nullptr;
  check(cc_rigid(g.h, o.length < 0 ? 4 : o.length, &out));
  Json j = take_json(out);
  bool all = true;
  if (o.tsv) std::cout << "kappa\tnu\tlevi\tcount\tcovered\n";
  for (const auto& r : j["rows"]) {
    all = all && r["covered"].get<bool>();
    if (o.json)
      std::cout << r.dump() << "\n";
    else if (o.tsv)
      std::cout << r["kappa"].get<std::string>() << "\t" << coweight(r["nu"]) << "\t" << r["levi"].get<std::string>() << "\t"
                << r["count"] << "\t" << (r["covered"].get<bool>() ? "true" : "false") << "\n";
    else
      std::cout << "kappa=" << r["kappa"].get<std::string>() << " nu=" << coweight(r["nu"]) << "  M=" << r["levi"].get<std::string>()
                << "  classes " << r["count"] << "  covered " << (r["covered"].get<bool>() ? "true" : "false") << "\n";
  }
  return all ? kOk : kSuiteFailed;
}

int cmd_verify(const Options& o, const std::string& suite, bool group_given) {
  std::string group, lattice = o.lattice;
  if (!o.config.empty()) {
    Group g;
    open_group(o, g);
    char* out = nullptr;
    check(cc_describe(g.h, &out));
    Json j = take_json(out);
    group = j["group"].get<std::string>();
    group = group.substr(0, group.find('-'));
    lattice = j["lattice"].get<std::string>();
  } else if (group_given) {
    group = o.group;
  }
  cc_verify_options vo{};
  vo.group = group.empty() ? nullptr : group.c_str();
  vo.lattice = lattice.c_str();
  vo.length = o.length;
  vo.seed = o.seed;
  vo.jobs = o.jobs;
  vo.random_strategies = 0;
  vo.cap = o.cap;
  const char* dir = std::getenv("NEWTON_COCENTER_CACHE");
  vo.cache_dir = dir;
  vo.format = o.json ? CC_FORMAT_JSON : (o.tsv ? CC_FORMAT_TSV : CC_FORMAT_TEXT);
  char* out = nullptr;
  char* timings = nullptr;
  int passed = 0;
  check(cc_verify(suite.c_str(), &vo, &out, &timings, &passed));
  std::cout << out;
  std::cerr << timings;
  cc_string_free(out);
  cc_string_free(timings);
  return passed ? kOk : kSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  static std::once_flag anchor_once;
  cc_status anchor = CC_OK;
  std::call_once(anchor_once, [&] { anchor = cc_self_test(); });
  if (anchor != CC_OK) {
    std::cerr << "self-test failed: " << cc_last_error() << "\n";
    return kLogic;
  }

  CLI::App app{"Newton decomposition and cocenter computations for extended affine Weyl groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  auto* group_opt = app.add_option("--group", o.group, "group: A1..A4, B2..B4, C2..C4, D4, F4, G2, GL1..GL5");
  app.add_option("--lattice", o.lattice, "sc or adjoint (ignored for GL)");
  app.add_option("--config", o.config, "key = value file with type, rank, lattice");
  auto* json_flag = app.add_flag("--json", o.json, "JSON-lines output");
  app.add_flag("--tsv", o.tsv, "tab-separated output")->excludes(json_flag);
  app.add_option("--seed", o.seed, "seed for randomized suites");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--length", o.length, "ball radius")->check(CLI::NonNegativeNumber);
  app.add_option("--v", o.v, "rational coweight, e.g. (2/3,2/3,1/2)");
  app.add_option("--omega", o.omega, "Omega labels for strata (repeatable)");
  app.add_option("--cap", o.cap, "ball length cap")->check(CLI::NonNegativeNumber);

  std::vector<std::string> elems;
  std::string elem, expr, action = "describe", suite = "all";
  auto* describe = app.add_subcommand("describe", "root datum and simple affine reflections");
  auto* newton = app.add_subcommand("newton", "Newton point, kappa and straightness of elements");
  newton->add_option("elem", elems, "elements")->required();
  auto* strata = app.add_subcommand("strata", "Newton strata of a length ball");
  auto* reduce = app.add_subcommand("reduce", "reduction path to a minimal length element");
  reduce->add_option("elem", elem)->required();
  auto* triple = app.add_subcommand("triple", "standard triple of the minimal element reached");
  triple->add_option("elem", elem)->required();
  auto* alcove = app.add_subcommand("alcove-test", "v-alcove test");
  alcove->add_option("elem", elem)->required();
  auto* positivity = app.add_subcommand("positivity", "positivity exponent with its certificate");
  positivity->add_option("elem", elem)->required();
  auto* levi = app.add_subcommand("levi", "Levi subgroup M_v");
  levi->add_option("action", action, "describe");
  auto* creduce = app.add_subcommand("cocenter-reduce", "normal form in the cocenter");
  creduce->add_option("expr", expr)->required();
  auto* induce = app.add_subcommand("induce", "induction from M_v");
  induce->add_option("expr", expr)->required();
  auto* rigid = app.add_subcommand("rigid", "rigid decomposition of a length ball");
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("suite", suite, "anchor, length, newton, reduction, alcove, levi, positivity, cocenter, rigid or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*describe) return cmd_describe(o);
    if (*newton) return cmd_newton(o, elems);
    if (*strata) return cmd_strata(o);
    if (*reduce) return cmd_reduce(o, elem);
    if (*triple) return cmd_triple(o, elem);
    if (*alcove) return cmd_alcove(o, elem);
    if (*positivity) return cmd_positivity(o, elem);
    if (*levi) return cmd_levi(o, action);
    if (*creduce) return cmd_cocenter_reduce(o, expr);
    if (*induce) return cmd_induce(o, expr);
    if (*rigid) return cmd_rigid(o);
    if (*verify) return cmd_verify(o, suite, group_opt->count() > 0);
  } catch (const Failure& f) {
    if (!f.message.empty()) {
      std::cerr << "error: " << f.message << "\n";
      if (!f.production.empty()) std::cerr << "  (grammar production <" << f.production << ">)\n";
    }
    return exit_code(f.status);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed library output: " << e.what() << "\n";
    return kLogic;
  }
  return kBadInput;
}
