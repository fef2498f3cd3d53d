#pragma once

#include <map>
#include <string>

namespace cocenter {

// Parses `key = value` lines; blank lines and '#' comments are skipped. Keys are lower-cased.
std::map<std::string, std::string> parse_config(const std::string& text);

}  // namespace cocenter
