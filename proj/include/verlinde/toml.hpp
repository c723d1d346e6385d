#ifndef VERLINDE_TOML_HPP
#define VERLINDE_TOML_HPP

#include <json.hpp>

#include <string>

namespace verlinde::toml {

// Reads the TOML subset used by the data files: comments, bare/quoted keys,
// integers, strings, booleans, (nested, multi-line) arrays, inline tables,
// [table], [a.b] and [[array-of-tables]] headers.  The document becomes a JSON object.
nlohmann::json parse(const std::string& text);
nlohmann::json parse_file(const std::string& path);

} // namespace verlinde::toml

#endif
