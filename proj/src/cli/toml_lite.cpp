#include <cctype>

#include "dp2/cli/cli.hpp"

namespace dp2 {

InputError::InputError(const std::string& what, std::optional<TextPos> p)
    : std::runtime_error(p ? p->str() + ": " + what : what), pos(p), message(what) {}

const TomlNode* TomlNode::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

std::string TomlNode::kind_name() const {
  switch (kind) {
    case Kind::table: return "table";
    case Kind::array: return "array";
    case Kind::string: return "string";
    case Kind::integer: return "integer";
    case Kind::boolean: return "boolean";
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& t) : text_(t) {}

  TomlNode document() {
    TomlNode root;
    root.pos = here();
    TomlNode* current = &root;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        TextPos p = here();
        bool array = peek(1) == '[';
        pos_ += array ? 2 : 1;
        col_ += array ? 2 : 1;
        auto path = key_path();
        skip_ws();
        expect(']');
        if (array) expect(']');
        end_of_line();
        current = open_table(root, path, array, p);
        continue;
      }
      TextPos p = here();
      auto path = key_path();
      skip_ws();
      expect('=');
      skip_ws();
      TomlNode v = value();
      end_of_line();
      TomlNode* t = current;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) t = child_table(*t, path[i], p);
      insert(*t, path.back(), std::move(v), p);
    }
    return root;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t k = 0) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }
  TextPos here() const { return {line_, col_, {}}; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  [[noreturn]] void fail(const std::string& what) const { throw InputError(what, here()); }
  [[noreturn]] void fail(const std::string& what, TextPos p) const { throw InputError(what, p); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + (eof() ? " before end of input" : ""));
    get();
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) get();
  }
  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') get();
  }
  void skip_blank_lines() {
    while (!eof()) {
      skip_ws();
      skip_comment();
      if (peek() == '\r') get();
      if (peek() == '\n') {
        get();
        continue;
      }
      break;
    }
  }
  // Whitespace, newlines and comments inside arrays.
  void skip_array_space() { skip_blank_lines(); }
  void end_of_line() {
    skip_ws();
    skip_comment();
    if (peek() == '\r') get();
    if (eof()) return;
    if (peek() != '\n') fail("unexpected text after value");
    get();
  }

  std::string bare_or_quoted_key() {
    if (peek() == '"') return basic_string();
    std::string k;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) k += get();
    if (k.empty()) fail("expected a key");
    return k;
  }
  std::vector<std::string> key_path() {
    std::vector<std::string> path;
    skip_ws();
    path.push_back(bare_or_quoted_key());
    skip_ws();
    while (peek() == '.') {
      get();
      skip_ws();
      path.push_back(bare_or_quoted_key());
      skip_ws();
    }
    return path;
  }

  std::string basic_string() {
    expect('"');
    std::string s;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = get();
      if (c == '"') break;
      if (c != '\\') {
        s += c;
        continue;
      }
      char e = eof() ? '\0' : get();
      switch (e) {
        case '"': s += '"'; break;
        case '\\': s += '\\'; break;
        case 'n': s += '\n'; break;
        case 't': s += '\t'; break;
        case 'r': s += '\r'; break;
        default: fail(std::string("unsupported escape \\") + e);
      }
    }
    return s;
  }
  std::string literal_string() {
    expect('\'');
    std::string s;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = get();
      if (c == '\'') break;
      s += c;
    }
    return s;
  }

  TomlNode value() {
    TomlNode n;
    n.pos = here();
    char c = peek();
    if (c == '"') {
      n.kind = TomlNode::Kind::string;
      n.s = basic_string();
    } else if (c == '\'') {
      n.kind = TomlNode::Kind::string;
      n.s = literal_string();
    } else if (c == '[') {
      n.kind = TomlNode::Kind::array;
      get();
      skip_array_space();
      while (peek() != ']') {
        n.items.push_back(value());
        skip_array_space();
        if (peek() == ',') {
          get();
          skip_array_space();
        } else if (peek() != ']') {
          fail("expected ',' or ']' in array");
        }
      }
      get();
    } else if (c == '{') {
      n.kind = TomlNode::Kind::table;
      get();
      skip_ws();
      if (peek() == '}') {
        get();
        return n;
      }
      while (true) {
        TextPos p = here();
        auto path = key_path();
        skip_ws();
        expect('=');
        skip_ws();
        TomlNode v = value();
        TomlNode* t = &n;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) t = child_table(*t, path[i], p);
        insert(*t, path.back(), std::move(v), p);
        skip_ws();
        if (peek() == ',') {
          get();
          skip_ws();
          continue;
        }
        expect('}');
        break;
      }
    } else if (text_.compare(pos_, 4, "true") == 0) {
      n.kind = TomlNode::Kind::boolean;
      n.b = true;
      for (int k = 0; k < 4; ++k) get();
    } else if (text_.compare(pos_, 5, "false") == 0) {
      n.kind = TomlNode::Kind::boolean;
      for (int k = 0; k < 5; ++k) get();
    } else if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      n.kind = TomlNode::Kind::integer;
      std::string digits;
      if (c == '+' || c == '-') digits += get();
      while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
        char d = get();
        if (d != '_') digits += d;
      }
      if (peek() == '.' || peek() == 'e' || peek() == 'E')
        fail("floating point values are not supported; write exact rationals as strings", n.pos);
      if (digits.empty() || digits == "+" || digits == "-") fail("malformed integer", n.pos);
      try {
        n.i = std::stoll(digits);
      } catch (const std::out_of_range&) {
        fail("integer out of range", n.pos);
      }
    } else {
      fail(eof() ? "expected a value before end of input" : std::string("unexpected character '") + c + "'");
    }
    return n;
  }

  void insert(TomlNode& t, const std::string& key, TomlNode v, TextPos p) {
    if (t.find(key)) fail("duplicate key '" + key + "'", p);
    t.fields.emplace_back(key, std::move(v));
  }
  TomlNode* child_table(TomlNode& t, const std::string& key, TextPos p) {
    for (auto& [k, v] : t.fields) {
      if (k != key) continue;
      if (v.kind == TomlNode::Kind::table) return &v;
      if (v.kind == TomlNode::Kind::array && !v.items.empty() && v.items.back().kind == TomlNode::Kind::table)
        return &v.items.back();
      fail("key '" + key + "' is not a table", p);
    }
    TomlNode n;
    n.pos = p;
    t.fields.emplace_back(key, std::move(n));
    return &t.fields.back().second;
  }
  TomlNode* open_table(TomlNode& root, const std::vector<std::string>& path, bool array, TextPos p) {
    TomlNode* t = &root;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) t = child_table(*t, path[i], p);
    const std::string& last = path.back();
    for (auto& [k, v] : t->fields) {
      if (k != last) continue;
      if (array) {
        if (v.kind != TomlNode::Kind::array) fail("key '" + last + "' is not an array of tables", p);
        TomlNode n;
        n.pos = p;
        v.items.push_back(std::move(n));
        return &v.items.back();
      }
      fail("table '" + last + "' defined twice", p);
    }
    TomlNode n;
    n.pos = p;
    if (array) {
      TomlNode arr;
      arr.kind = TomlNode::Kind::array;
      arr.pos = p;
      arr.items.push_back(std::move(n));
      t->fields.emplace_back(last, std::move(arr));
      return &t->fields.back().second.items.back();
    }
    t->fields.emplace_back(last, std::move(n));
    return &t->fields.back().second;
  }
};

}  // namespace

TomlNode parse_toml(const std::string& text) {
  Parser p(text);
  return p.document();
}

}  // namespace dp2
