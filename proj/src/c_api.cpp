#include "cocenter.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cocenter/errors.hpp"
#include "cocenter/hecke.hpp"
#include "cocenter/levi_alcove.hpp"
#include "cocenter/newton.hpp"
#include "cocenter/persist.hpp"
#include "cocenter/reduction.hpp"
#include "cocenter/suites.hpp"
#include "cocenter/syntax.hpp"

using namespace cocenter;
using Json = nlohmann::ordered_json;

struct cc_group {
  std::shared_ptr<const RootDatum> datum;
  std::unique_ptr<IwahoriWeyl> g;
  std::unique_ptr<Cocenter> cc;
  std::string cache_dir;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_production;

template <class F>
cc_status guarded(F&& f) {
  last_error.clear();
  last_production.clear();
  try {
    f();
    return CC_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    last_production = e.production();
    return CC_ERR_PARSE;
  } catch (const ConfigError& e) {
    last_error = e.what();
    return CC_ERR_CONFIG;
  } catch (const InputError& e) {
    last_error = e.what();
    return CC_ERR_INPUT;
  } catch (const ResourceError& e) {
    last_error = e.what();
    return CC_ERR_RESOURCE;
  } catch (const InvariantViolation& e) {
    last_error = e.what();
    return CC_ERR_INVARIANT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CC_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(const Json& j, char** out) {
  if (!out) throw InputError("null output pointer");
  *out = dup(j.dump());
}

void need(const void* p, const char* what) {
  if (!p) throw InputError(std::string("null ") + what);
}

Json coweight_json(const RatVec& v, int dim) {
  Json a = Json::array();
  for (int i = 0; i < dim; ++i) a.push_back(format_rational_pq(v[i]));
  return a;
}

Json element_json(const IwahoriWeyl& g, const Element& w) {
  Json j;
  j["elem"] = format_element(g, w);
  j["word"] = format_affine_word(g, w);
  j["length"] = g.length(w);
  j["kappa"] = format_label(g.kappa(w));
  j["newton"] = coweight_json(newton_point(g, w), g.dim());
  j["nu_bar"] = coweight_json(newton_index(g, w).nu_bar, g.dim());
  j["straight"] = is_straight(g, w);
  return j;
}

Json normal_form_json(const IwahoriWeyl& g, const CocenterNormalForm& nf) {
  Json comps = Json::object();
  for (const auto& [idx, f] : nf.components) {
    Json c;
    c["nu"] = coweight_json(idx.nu_bar, g.dim());
    c["omega"] = format_label(idx.omega);
    Json terms = Json::array();
    for (const auto& [w, p] : f) terms.push_back({{"elem", format_element(g, w)}, {"poly", p.str()}});
    c["terms"] = terms;
    comps[format_index(idx, g.dim())] = c;
  }
  return comps;
}

cc_group* make_group(const GroupDescriptor& desc) {
  auto h = std::make_unique<cc_group>();
  h->datum = RootDatum::build(desc);
  h->g = std::make_unique<IwahoriWeyl>(h->datum);
  h->cc = std::make_unique<Cocenter>(*h->g);
  return h.release();
}

}  // namespace

extern "C" {

const char* cc_last_error(void) { return last_error.c_str(); }
const char* cc_last_error_production(void) { return last_production.c_str(); }
void cc_string_free(char* s) { std::free(s); }
const char* cc_version(void) { return "1.0.0"; }

cc_status cc_self_test(void) {
  return guarded([] { check_affine_anchor(); });
}

cc_status cc_group_create(const char* shorthand, const char* lattice, cc_group** out) {
  return guarded([&] {
    need(shorthand, "group name");
    need(out, "output pointer");
    *out = make_group(GroupDescriptor::parse(shorthand, lattice ? lattice : "sc"));
  });
}

cc_status cc_group_from_config(const char* text, cc_group** out) {
  return guarded([&] {
    need(text, "configuration");
    need(out, "output pointer");
    *out = make_group(GroupDescriptor::from_config_text(text));
  });
}

void cc_group_free(cc_group* g) { delete g; }

cc_status cc_group_set_cap(cc_group* g, int cap) {
  return guarded([&] {
    need(g, "group");
    if (cap < 0) throw InputError("negative cap");
    g->g->set_ball_cap(cap);
  });
}

cc_status cc_group_attach_cache(cc_group* g, const char* dir) {
  return guarded([&] {
    need(g, "group");
    g->cache_dir = dir ? dir : "";
    if (!g->cache_dir.empty()) load_cache(*g->cc, g->cache_dir);
  });
}

cc_status cc_group_save_cache(const cc_group* g) {
  return guarded([&] {
    need(g, "group");
    if (!g->cache_dir.empty()) save_cache(*g->cc, g->cache_dir);
  });
}

cc_status cc_describe(const cc_group* h, char** out) {
  return guarded([&] {
    need(h, "group");
    const auto& g = *h->g;
    const auto& d = *h->datum;
    Json j;
    j["group"] = d.descriptor().label();
    j["lattice"] = lattice_kind_name(d.descriptor().lattice);
    j["dim"] = d.dim();
    j["semisimple_rank"] = d.semisimple_rank();
    j["roots"] = d.roots().size();
    j["weyl_order"] = d.weyl().size();
    j["omega"] = g.omega_group().describe();
    j["ball_cap"] = g.ball_cap();
    Json simples = Json::array();
    for (int i = 0; i < g.num_simple(); ++i) {
      const auto& a = g.simple_root(i);
      IntVec ch = d.root(a.root).character;
      Json c = Json::array();
      for (int k = 0; k < d.dim(); ++k) c.push_back(ch[k]);
      simples.push_back({{"name", "S" + std::to_string(i)},
                         {"elem", format_element(g, g.simple(i))},
                         {"affine_root", {{"root", c}, {"level", a.level}}}});
    }
    j["simple_reflections"] = simples;
    emit(j, out);
  });
}

cc_status cc_element_info(const cc_group* h, const char* elem, char** out) {
  return guarded([&] {
    need(h, "group");
    need(elem, "element");
    emit(element_json(*h->g, parse_element(*h->g, elem)), out);
  });
}

cc_status cc_strata(const cc_group* h, int length, const char* omega_labels, char** out) {
  return guarded([&] {
    need(h, "group");
    const auto& g = *h->g;
    std::vector<LatticeQuotient::Label> labels;
    if (omega_labels && *omega_labels) {
      std::stringstream ss(omega_labels);
      std::string item;
      while (std::getline(ss, item, ';')) labels.push_back(g.omega_group().normalize(parse_label(item)));
    } else {
      labels = g.default_labels();
    }
    Json rows = Json::array();
    for (const auto& [idx, elems] : strata(g, length, labels)) {
      Json e = Json::array();
      for (const auto& w : elems) e.push_back(format_element(g, w));
      rows.push_back({{"kappa", format_label(idx.omega)},
                      {"nu", coweight_json(idx.nu_bar, g.dim())},
                      {"count", elems.size()},
                      {"elements", e}});
    }
    Json j;
    j["length"] = length;
    j["strata"] = rows;
    emit(j, out);
  });
}

cc_status cc_reduce(const cc_group* h, const char* elem, char** out) {
  return guarded([&] {
    need(h, "group");
    need(elem, "element");
    const auto& g = *h->g;
    Element w = parse_element(g, elem);
    auto path = reduce_to_min(g, w);
    Json steps = Json::array();
    for (const auto& st : path.steps)
      steps.push_back({{"s", "S" + std::to_string(st.s)},
                       {"kind", step_kind_name(st.kind)},
                       {"result", format_element(g, st.result)},
                       {"word", format_affine_word(g, st.result)},
                       {"length", st.length}});
    Json j;
    j["start"] = format_element(g, path.start);
    j["steps"] = steps;
    j["end"] = format_element(g, path.end);
    j["end_word"] = format_affine_word(g, path.end);
    j["end_length"] = g.length(path.end);
    j["path_bound"] = path_bound(g, w);
    j["replay_ok"] = replay(g, path);
    emit(j, out);
  });
}

cc_status cc_triple(const cc_group* h, const char* elem, char** out) {
  return guarded([&] {
    need(h, "group");
    need(elem, "element");
    const auto& g = *h->g;
    Element w = parse_element(g, elem);
    Element m = reduce_to_min(g, w).end;
    auto t = standard_triple(g, m);
    std::string err = check_triple(g, t);
    if (!err.empty()) throw InvariantViolation("standard triple check failed: " + err);
    Json K = Json::array();
    for (int s : t.K) K.push_back("S" + std::to_string(s));
    Json j;
    j["input"] = format_element(g, w);
    j["minimal"] = format_element(g, m);
    j["x"] = format_element(g, t.x);
    j["K"] = K;
    j["u"] = format_element(g, t.u);
    j["y"] = format_element(g, t.y);
    j["x_straight"] = is_straight(g, t.x);
    j["newton"] = coweight_json(newton_index(g, m).nu_bar, g.dim());
    emit(j, out);
  });
}

cc_status cc_alcove_test(const cc_group* h, const char* elem, const char* coweight, char** out) {
  return guarded([&] {
    need(h, "group");
    need(elem, "element");
    need(coweight, "coweight");
    const auto& g = *h->g;
    Element w = parse_element(g, elem);
    RatVec v = parse_coweight(g.dim(), coweight);
    Json j;
    j["elem"] = format_element(g, w);
    j["v"] = coweight_json(v, g.dim());
    j["alcove"] = is_v_alcove(g, w, v);
    j["minimal"] = is_min_in_class(g, w);
    emit(j, out);
  });
}

cc_status cc_positivity(const cc_group* h, const char* elem, const char* coweight, char** out) {
  return guarded([&] {
    need(h, "group");
    need(elem, "element");
    need(coweight, "coweight");
    const auto& g = *h->g;
    Element w = parse_element(g, elem);
    RatVec v = parse_coweight(g.dim(), coweight);
    LeviWeylGroup m(h->datum, v);
    auto c = positivity_exponent(g, m, w);
    Json j;
    j["elem"] = format_element(g, w);
    j["v"] = coweight_json(v, g.dim());
    j["levi"] = m.label();
    j["exponent"] = c.exponent;
    j["exponent_bound"] = c.exponent_bound;
    j["n0"] = c.n0;
    j["n1"] = c.n1;
    j["i"] = c.i_frak;
    j["first_power_positive"] = c.first_power_positive;
    if (c.witness_root >= 0) {
      IntVec ch = h->datum->root(c.witness_root).character;
      Json r = Json::array();
      for (int k = 0; k < g.dim(); ++k) r.push_back(ch[k]);
      j["witness_root"] = r;
      j["witness_shift"] = c.witness_shift;
    }
    emit(j, out);
  });
}

cc_status cc_levi_describe(const cc_group* h, const char* coweight, char** out) {
  return guarded([&] {
    need(h, "group");
    need(coweight, "coweight");
    const auto& g = *h->g;
    RatVec v = parse_coweight(g.dim(), coweight);
    LeviWeylGroup m(h->datum, v);
    Json roots = Json::array();
    for (int r : m.group().simple_system()) {
      IntVec ch = h->datum->root(r).character;
      Json c = Json::array();
      for (int k = 0; k < g.dim(); ++k) c.push_back(ch[k]);
      roots.push_back(c);
    }
    Json j;
    j["v"] = coweight_json(v, g.dim());
    j["label"] = m.label();
    j["simple_roots"] = roots;
    j["roots"] = m.group().system_roots().size();
    j["plus_roots"] = m.levi().plus_roots.size();
    j["weyl_order"] = m.group().finite_elements().size();
    j["omega"] = m.group().omega_group().describe();
    j["max_finite_parabolic"] = m.max_finite_parabolic();
    emit(j, out);
  });
}

cc_status cc_cocenter_reduce(const cc_group* h, const char* expr, char** out) {
  return guarded([&] {
    need(h, "group");
    need(expr, "expression");
    const auto& g = *h->g;
    auto nf = h->cc->normal_form(parse_hecke(g, expr));
    emit(normal_form_json(g, nf), out);
  });
}

cc_status cc_induce(const cc_group* h, const char* coweight, const char* expr, char** out) {
  return guarded([&] {
    need(h, "group");
    need(coweight, "coweight");
    need(expr, "expression");
    const auto& g = *h->g;
    LeviWeylGroup m(h->datum, parse_coweight(g.dim(), coweight));
    auto f = parse_hecke(g, expr);
    if (f.empty()) throw InputError("induce needs a nonzero element");
    for (const auto& [w, c] : f)
      if (!m.is_member(w)) throw InputError(format_element(g, w) + " is not in " + m.label());
    NewtonIndex nu_m = m.pi(f.begin()->first);
    auto nf = induce(*h->cc, m, f, nu_m);
    Json j;
    j["levi"] = m.label();
    j["nu_m"] = {{"omega", format_label(nu_m.omega)}, {"nu", coweight_json(nu_m.nu_bar, g.dim())}};
    auto target = newton_index_map(g, m, nu_m);
    j["target"] = format_index(target, g.dim());
    j["normal_form"] = normal_form_json(g, nf);
    emit(j, out);
  });
}

cc_status cc_rigid(const cc_group* h, int length, char** out) {
  return guarded([&] {
    need(h, "group");
    const auto& g = *h->g;
    Json rows = Json::array();
    for (const auto& r : rigid_decomposition(*h->cc, length))
      rows.push_back({{"kappa", format_label(r.index.omega)},
                      {"nu", coweight_json(r.index.nu_bar, g.dim())},
                      {"levi", r.levi},
                      {"count", r.count},
                      {"central", r.central},
                      {"covered", r.covered},
                      {"method", r.method}});
    Json j;
    j["length"] = length;
    j["rows"] = rows;
    emit(j, out);
  });
}

cc_status cc_verify(const char* suite, const cc_verify_options* options, char** out, char** out_timings,
                    int* passed) {
  return guarded([&] {
    need(suite, "suite name");
    need(out, "output pointer");
    SuiteOptions o;
    cc_format format = CC_FORMAT_TEXT;
    if (options) {
      if (options->group && *options->group) o.group = options->group;
      if (options->lattice && *options->lattice) o.lattice = options->lattice;
      if (options->length >= 0) o.length = options->length;
      o.seed = options->seed;
      o.jobs = options->jobs > 0 ? options->jobs : 1;
      if (options->random_strategies > 0) o.random_strategies = options->random_strategies;
      if (options->cap > 0) o.cap = options->cap;
      if (options->cache_dir) o.cache_dir = options->cache_dir;
      format = options->format;
    }
    std::string name = suite;
    auto reports = name == "all" ? run_all(o) : run_suite(name, o);
    std::string text, timings;
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.passed();
      switch (format) {
        case CC_FORMAT_JSON: text += report_json(r) + "\n"; break;
        case CC_FORMAT_TSV: text += report_tsv(r); break;
        default: text += report_text(r); break;
      }
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(3);
      t << r.suite << " " << r.target.group << "-" << r.target.lattice << " " << r.wall_seconds << " s\n";
      timings += t.str();
    }
    if (format == CC_FORMAT_TEXT) text += std::string("verify ") + name + ": " + (ok ? "PASS" : "FAIL") + "\n";
    *out = dup(text);
    if (out_timings) *out_timings = dup(timings);
    if (passed) *passed = ok ? 1 : 0;
  });
}

}  // extern "C"
