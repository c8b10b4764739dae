#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kstab::toml {

// Just enough of TOML for the dataset schema: single-segment [table] and
// [[array-of-tables]] headers, quoted strings, bare scalar tokens, arrays
// (newlines allowed inside) and inline tables. Everything scalar is kept
// as its token text; callers convert.
struct Value {
  enum class Kind { String, Array, Table };

  Kind kind = Kind::Table;
  std::string str;
  std::vector<Value> array;
  std::map<std::string, Value> table;

  bool is_string() const { return kind == Kind::String; }
  bool is_array() const { return kind == Kind::Array; }
  bool is_table() const { return kind == Kind::Table; }
};

Value parse(std::string_view text);
Value parse_file(const std::string& path);

// Accessors that throw ParseError with the key name on mismatch.
const Value* find(const Value& table, const std::string& key);
const Value& get(const Value& table, const std::string& key);
const std::string& get_string(const Value& table, const std::string& key);
const std::vector<Value>& get_array(const Value& table, const std::string& key);

}  // namespace kstab::toml
