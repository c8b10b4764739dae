#include "kstab/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "kstab/errors.hpp"

namespace kstab::toml {

namespace {

bool is_bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         c == '+';
}

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }

  // whitespace and comments; newlines skipped only when asked
  void skip(bool over_newlines) {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else if (c == '\n' && over_newlines) {
        take();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  std::string bare_token() {
    size_t start = pos;
    while (!done() && is_bare_char(peek())) ++pos;
    if (pos == start) fail("expected a key or value");
    return std::string(text.substr(start, pos - start));
  }

  std::string quoted_string() {
    expect('"');
    std::string out;
    while (true) {
      if (done()) fail("unterminated string");
      char c = take();
      if (c == '"') break;
      if (c == '\n') fail("newline in string");
      if (c == '\\') {
        if (done()) fail("dangling escape");
        char e = take();
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  Value value() {
    skip(false);
    if (done()) fail("expected a value");
    char c = peek();
    if (c == '"') {
      Value v;
      v.kind = Value::Kind::String;
      v.str = quoted_string();
      return v;
    }
    if (c == '[') {
      take();
      Value v;
      v.kind = Value::Kind::Array;
      while (true) {
        skip(true);
        if (done()) fail("unterminated array");
        if (peek() == ']') { take(); break; }
        v.array.push_back(value());
        skip(true);
        if (!done() && peek() == ',') { take(); continue; }
        if (!done() && peek() == ']') { take(); break; }
        fail("expected ',' or ']' in array");
      }
      return v;
    }
    if (c == '{') {
      take();
      Value v;
      v.kind = Value::Kind::Table;
      while (true) {
        skip(true);
        if (done()) fail("unterminated inline table");
        if (peek() == '}') { take(); break; }
        std::string key = bare_token();
        skip(false);
        expect('=');
        Value inner = value();
        if (!v.table.emplace(std::move(key), std::move(inner)).second)
          fail("duplicate key in inline table");
        skip(true);
        if (!done() && peek() == ',') { take(); continue; }
        if (!done() && peek() == '}') { take(); break; }
        fail("expected ',' or '}' in inline table");
      }
      return v;
    }
    Value v;
    v.kind = Value::Kind::String;
    v.str = bare_token();
    return v;
  }
};

}  // namespace

Value parse(std::string_view text) {
  Cursor cur{text};
  Value root;
  Value* current = &root;

  while (true) {
    cur.skip(true);
    if (cur.done()) break;

    if (cur.peek() == '[') {
      cur.take();
      const bool is_array = !cur.done() && cur.peek() == '[';
      if (is_array) cur.take();
      cur.skip(false);
      std::string name = cur.bare_token();
      cur.skip(false);
      cur.expect(']');
      if (is_array) cur.expect(']');

      if (is_array) {
        Value& slot = root.table[name];
        if (slot.kind == Value::Kind::Table && slot.table.empty() && slot.array.empty())
          slot.kind = Value::Kind::Array;
        if (!slot.is_array()) cur.fail("'" + name + "' is not an array of tables");
        slot.array.emplace_back();
        slot.array.back().kind = Value::Kind::Table;
        current = &slot.array.back();
      } else {
        Value& slot = root.table[name];
        if (!slot.is_table()) cur.fail("'" + name + "' is not a table");
        current = &slot;
      }
      continue;
    }

    std::string key = cur.bare_token();
    cur.skip(false);
    cur.expect('=');
    Value v = cur.value();
    if (!current->table.emplace(std::move(key), std::move(v)).second)
      cur.fail("duplicate key");
  }
  return root;
}

Value parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const Value* find(const Value& table, const std::string& key) {
  auto it = table.table.find(key);
  return it == table.table.end() ? nullptr : &it->second;
}

const Value& get(const Value& table, const std::string& key) {
  if (const Value* v = find(table, key)) return *v;
  throw Error(ErrorCode::ParseError, "missing key '" + key + "'");
}

const std::string& get_string(const Value& table, const std::string& key) {
  const Value& v = get(table, key);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, "key '" + key + "' is not a scalar");
  return v.str;
}

const std::vector<Value>& get_array(const Value& table, const std::string& key) {
  const Value& v = get(table, key);
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "key '" + key + "' is not an array");
  return v.array;
}

}  // namespace kstab::toml
