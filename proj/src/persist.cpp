#include "cocenter/persist.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "cocenter/errors.hpp"
#include "cocenter/syntax.hpp"

namespace cocenter {

using nlohmann::json;

std::string cache_path(const std::string& dir, const IwahoriWeyl& g) {
  const auto& desc = g.datum().descriptor();
  return (std::filesystem::path(dir) / ("memo-" + desc.label() + ".json")).string();
}

std::size_t load_cache(const Cocenter& cc, const std::string& dir) {
  const auto path = cache_path(dir, cc.group());
  std::ifstream in(path);
  if (!in) return 0;
  json doc;
  try {
    in >> doc;
  } catch (const json::exception&) {
    return 0;
  }
  const auto& desc = cc.group().datum().descriptor();
  if (doc.value("schema", "") != kCacheSchema || doc.value("group", "") != desc.label()) return 0;
  std::vector<std::pair<Element, HeckeElement>> entries;
  try {
    for (const auto& e : doc.at("entries")) {
      HeckeElement f;
      for (const auto& t : e.at("terms"))
        hecke_accumulate(f, parse_element(cc.group(), t.at("elem").get<std::string>()),
                         Poly::parse(t.at("poly").get<std::string>()));
      entries.emplace_back(parse_element(cc.group(), e.at("elem").get<std::string>()), std::move(f));
    }
  } catch (const json::exception&) {
    return 0;
  } catch (const Error&) {
    return 0;
  }
  cc.preload(entries);
  return entries.size();
}

void save_cache(const Cocenter& cc, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto& g = cc.group();
  const auto& desc = g.datum().descriptor();
  json doc;
  doc["schema"] = kCacheSchema;
  doc["group"] = desc.label();
  json entries = json::array();
  for (const auto& [w, f] : cc.snapshot()) {
    json terms = json::array();
    for (const auto& [k, c] : f) terms.push_back({{"elem", format_element(g, k)}, {"poly", c.str()}});
    entries.push_back({{"elem", format_element(g, w)}, {"terms", terms}});
  }
  doc["entries"] = entries;
  const auto path = cache_path(dir, g);
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ConfigError("cannot write cache file " + tmp);
    out << doc.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::string cache_dir_from_env() {
  const char* v = std::getenv("NEWTON_COCENTER_CACHE");
  return v ? std::string(v) : std::string();
}

}  // namespace cocenter
