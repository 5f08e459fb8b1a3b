#include "session.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "plrot/catalog.hpp"
#include "plrot/error.hpp"
#include "plrot/literal.hpp"

namespace plrot::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Statement {
  std::string text;
  int line;
};

/// Splits on `sep` at bracket depth zero, dropping comments.
std::vector<Statement> split_top(std::string_view text, char sep, int first_line = 1) {
  std::vector<Statement> out;
  std::string cur;
  int depth = 0;
  int line = first_line;
  int start_line = first_line;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      in_comment = false;
      cur += ' ';
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (c == '{' || c == '(' || c == '[') ++depth;
    if (c == '}' || c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced closing bracket", line);
    if (c == sep && depth == 0) {
      if (!trim(cur).empty()) out.push_back({std::string(trim(cur)), start_line});
      cur.clear();
      start_line = line;
      continue;
    }
    if (trim(cur).empty() && !std::isspace(static_cast<unsigned char>(c))) start_line = line;
    cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced brackets", line);
  if (!trim(cur).empty()) out.push_back({std::string(trim(cur)), start_line});
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string_view strip_brackets(std::string_view s, char open, char close, const char* what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError(std::string("expected ") + what + " in " + open + "..." + close);
  }
  return s.substr(1, s.size() - 2);
}

PLMap catalog_map(std::string_view ref, const FieldContext& ctx) {
  static const std::regex re(R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(\((.*)\))?\s*\.\s*([A-Za-z_][A-Za-z0-9_]*)\s*$)");
  std::string s(ref);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("expected catalog NAME[(args)].GENERATOR");
  std::vector<std::string> args;
  if (m[2].matched) {
    for (const auto& a : split_top(m[3].str(), ',')) args.push_back(a.text);
  }
  CatalogEntry e = catalog_lookup(m[1].str(), args, ctx);
  const PLMap& map = e.generators.at(m[4].str());
  if (map.context() == ctx) return map;
  if (ctx.is_rational() || !map.context().is_rational()) {
    throw ParseError("catalog entry " + e.display_name() + " lives in field " + map.context().to_string() +
                     ", session field is " + ctx.to_string());
  }
  return map.in_context(ctx);
}

}  // namespace

PLMap parse_pl_body(std::string_view body, const FieldContext& ctx) {
  std::optional<std::pair<FieldElement, FieldElement>> ambient;
  std::vector<Node> nodes;
  bool have_nodes = false;
  for (const auto& item : split_top(body, ';')) {
    auto eq = item.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value in pl { ... }");
    std::string_view key = trim(std::string_view(item.text).substr(0, eq));
    std::string_view value = trim(std::string_view(item.text).substr(eq + 1));
    if (key == "ambient") {
      auto parts = split_top(strip_brackets(value, '[', ']', "interval"), ',');
      if (parts.size() != 2) throw ParseError("ambient needs two endpoints");
      ambient.emplace(parse_number(parts[0].text, ctx), parse_number(parts[1].text, ctx));
    } else if (key == "nodes") {
      have_nodes = true;
      for (const auto& p : split_top(strip_brackets(value, '[', ']', "node list"), ',')) {
        auto xy = split_top(strip_brackets(p.text, '(', ')', "node"), ',');
        if (xy.size() != 2) throw ParseError("a node is a pair (x, y)");
        nodes.push_back({parse_number(xy[0].text, ctx), parse_number(xy[1].text, ctx)});
      }
    } else {
      throw ParseError("unknown key '" + std::string(key) + "' in pl { ... }");
    }
  }
  if (!have_nodes) throw ParseError("pl { ... } needs nodes = [...]");
  if (ambient) {
    if (nodes.empty() || !(nodes.front().x == ambient->first)) nodes.insert(nodes.begin(), {ambient->first, ambient->first});
    if (!(nodes.back().x == ambient->second)) nodes.push_back({ambient->second, ambient->second});
  }
  return PLMap(std::move(nodes));
}

Session parse_session(std::string_view text) {
  Session s;
  bool seen_other = false;
  for (const auto& st : split_top(text, ';')) {
    try {
      std::istringstream in(st.text);
      std::string kw;
      in >> kw;
      std::string rest(trim(std::string_view(st.text).substr(kw.size())));
      if (kw == "field") {
        if (seen_other) throw ParseError("field must be declared before maps and words");
        if (rest == "rational" || rest == "Q") {
          s.field = FieldContext::rationals();
        } else {
          static const std::regex re(R"(^sqrt\s*\(\s*([0-9]+)\s*\)$)");
          std::smatch m;
          if (!std::regex_match(rest, m, re)) throw ParseError("expected field rational or field sqrt(N)");
          s.field = FieldContext(std::stoll(m[1].str()));
        }
        continue;
      }
      seen_other = true;
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected NAME = ...");
      std::string name(trim(std::string_view(rest).substr(0, eq)));
      std::string_view value = trim(std::string_view(rest).substr(eq + 1));
      if (!is_identifier(name)) throw ParseError("invalid name '" + name + "'");
      if (s.maps.contains(name) || s.words.count(name)) throw ParseError("name '" + name + "' defined twice");
      if (kw == "map") {
        if (value.substr(0, 2) == "pl") {
          std::string_view body = trim(value.substr(2));
          s.maps.add(name, parse_pl_body(strip_brackets(body, '{', '}', "map body"), s.field));
        } else if (value.substr(0, 7) == "catalog") {
          s.maps.add(name, catalog_map(value.substr(7), s.field));
        } else {
          throw ParseError("a map is `pl { ... }` or `catalog NAME.GENERATOR`");
        }
      } else if (kw == "word") {
        s.words.emplace(name, s.word(value));
      } else {
        throw ParseError("unknown statement '" + kw + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), st.line);
    } catch (const Error& e) {
      throw ParseError(e.what(), st.line);
    }
  }
  return s;
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open session file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

Word Session::word(std::string_view text) const {
  return parse_word(text, [this](std::string_view name) -> std::optional<Word> {
    auto it = words.find(name);
    if (it == words.end()) return std::nullopt;
    return it->second;
  });
}

PLMap Session::evaluate(std::string_view text) const { return word_evaluate(maps, word(text)); }

FieldElement Session::number(std::string_view text) const { return parse_number(text, field); }

FieldContext guess_field(std::string_view literal) {
  std::string s(literal);
  static const std::regex tau(R"(\btau\b)");
  if (std::regex_search(s, tau)) return FieldContext::golden();
  static const std::regex root(R"(sqrt\s*\(\s*([0-9]+)\s*\))");
  std::smatch m;
  if (std::regex_search(s, m, root)) {
    std::int64_t n = std::stoll(m[1].str());
    for (std::int64_t p = 2; p * p <= n; ++p) {
      while (n % (p * p) == 0) n /= p * p;
    }
    return FieldContext(n);
  }
  return FieldContext::rationals();
}

}  // namespace plrot::cli
