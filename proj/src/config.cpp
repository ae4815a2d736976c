#include "pacfol/config.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pacfol/parse.hpp"

namespace pacfol {

namespace {

using nlohmann::json;

struct TomlParser {
  const std::string& src;
  size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("TOML: " + msg, line);
  }

  bool eof() const { return pos >= src.size(); }
  char peek() const { return src[pos]; }

  void advance() {
    if (src[pos] == '\n') ++line;
    ++pos;
  }

  void skip_ws(bool over_newlines) {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' ||
                 (over_newlines && c == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string parse_key() {
    skip_ws(false);
    if (eof()) fail("expected a key");
    if (peek() == '"') return parse_string();
    std::string key;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_' || peek() == '-')) {
      key += peek();
      advance();
    }
    if (key.empty()) fail("expected a key");
    return key;
  }

  std::string parse_string() {
    if (peek() != '"') fail("expected '\"'");
    advance();
    std::string out;
    while (!eof() && peek() != '"') {
      char c = peek();
      if (c == '\\') {
        advance();
        if (eof()) fail("unterminated escape");
        char e = peek();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        out += c;
      }
      advance();
    }
    if (eof()) fail("unterminated string");
    advance();
    return out;
  }

  json parse_value() {
    skip_ws(false);
    if (eof()) fail("expected a value");
    char c = peek();
    if (c == '"') return parse_string();
    if (c == '[') {
      advance();
      json arr = json::array();
      skip_ws(true);
      if (!eof() && peek() == ']') {
        advance();
        return arr;
      }
      for (;;) {
        arr.push_back(parse_value());
        skip_ws(true);
        if (!eof() && peek() == ',') {
          advance();
          skip_ws(true);
          if (!eof() && peek() == ']') {  // trailing comma
            advance();
            return arr;
          }
          continue;
        }
        if (!eof() && peek() == ']') {
          advance();
          return arr;
        }
        fail("expected ',' or ']' in array");
      }
    }
    if (c == '{') {
      advance();
      json obj = json::object();
      skip_ws(false);
      if (!eof() && peek() == '}') {
        advance();
        return obj;
      }
      for (;;) {
        std::string key = parse_key();
        skip_ws(false);
        if (eof() || peek() != '=') fail("expected '=' in inline table");
        advance();
        obj[key] = parse_value();
        skip_ws(false);
        if (!eof() && peek() == ',') {
          advance();
          continue;
        }
        if (!eof() && peek() == '}') {
          advance();
          return obj;
        }
        fail("expected ',' or '}' in inline table");
      }
    }
    // bare scalar: bool or number
    std::string tok;
    while (!eof() && peek() != '\n' && peek() != ',' && peek() != ']' &&
           peek() != '}' && peek() != '#' && peek() != ' ' && peek() != '\t' &&
           peek() != '\r') {
      tok += peek();
      advance();
    }
    if (tok == "true") return true;
    if (tok == "false") return false;
    try {
      if (tok.find_first_of(".eE") != std::string::npos)
        return std::stod(tok);
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) fail("bad number '" + tok + "'");
      return v;
    } catch (const std::exception&) {
      fail("bad value '" + tok + "'");
    }
  }

  json run() {
    json root = json::object();
    json* table = &root;
    for (;;) {
      skip_ws(true);
      if (eof()) return root;
      if (peek() == '[') {
        advance();
        json* t = &root;
        for (;;) {
          std::string part = parse_key();
          t = &(*t)[part];
          if (t->is_null()) *t = json::object();
          skip_ws(false);
          if (!eof() && peek() == '.') {
            advance();
            continue;
          }
          break;
        }
        if (eof() || peek() != ']') fail("expected ']' after table name");
        advance();
        table = t;
        continue;
      }
      std::string key = parse_key();
      skip_ws(false);
      if (eof() || peek() != '=') fail("expected '=' after key '" + key + "'");
      advance();
      (*table)[key] = parse_value();
      skip_ws(false);
      if (!eof() && peek() != '\n') fail("trailing input after value");
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProperPlusKB kb_from_node(const json& node, const std::string& base_dir) {
  if (node.contains("path"))
    return parse_kb(
        read_file((std::filesystem::path(base_dir) /
                   node.at("path").get<std::string>()).string()));
  if (node.contains("inline")) {
    std::string text;
    for (const auto& line : node.at("inline")) {
      text += line.get<std::string>();
      text += "\n";
    }
    return parse_kb(text);
  }
  throw ParseError("kb: need 'path' or 'inline'");
}

std::map<Atom, bool> recipe_from_node(const json& node) {
  std::map<Atom, bool> out;
  for (auto& [key, val] : node.items())
    out[parse_ground_atom(key)] = val.get<int>() == 1;
  return out;
}

WorldDistributionSpec world_from_node(const json& node) {
  WorldDistributionSpec spec;
  for (const auto& entry : node.at("vocabulary")) {
    VocabularyEntry v;
    v.pred = entry.at(0).get<std::string>();
    v.arity = entry.at(1).get<size_t>();
    spec.vocabulary.push_back(std::move(v));
  }
  for (const auto& n : node.at("names"))
    spec.names.push_back(Name{n.get<std::string>()});
  spec.default_value = node.value("default", 0) == 1;
  spec.seed = node.value("seed", uint64_t{0});

  std::string mode = node.at("mode").get<std::string>();
  if (mode == "independent") {
    IndependentMode m;
    m.theta_true = node.at("theta").get<double>();
    spec.mode = m;
  } else if (mode == "planted") {
    PlantedMode m;
    // world.kb: list of clause strings forming the implicit KB
    std::string text;
    for (const auto& line : node.at("kb")) {
      text += line.get<std::string>();
      text += "\n";
    }
    m.implicit_kb = parse_kb(text);
    const json& p = node.at("p");
    if (p.is_array())
      for (const auto& x : p) m.probs.push_back(x.get<double>());
    else
      m.probs.push_back(p.get<double>());
    const json& v = node.at("violate");
    if (v.is_array())
      for (const auto& x : v) m.violations.push_back(recipe_from_node(x));
    else
      m.violations.push_back(recipe_from_node(v));
    spec.mode = std::move(m);
  } else {
    throw ParseError("world.mode must be 'independent' or 'planted'");
  }
  return spec;
}

MaskSpec mask_from_node(const json& node) {
  MaskSpec spec;
  spec.seed = node.value("seed", uint64_t{0});
  std::string kind = node.at("kind").get<std::string>();
  if (kind == "independent-hide") {
    spec.kind = MaskIndependentHide{node.at("rho").get<double>()};
  } else if (kind == "hide-names") {
    spec.kind = MaskHideNames{node.at("count").get<size_t>()};
  } else if (kind == "hide-predicates") {
    MaskHidePredicates m;
    for (const auto& p : node.at("preds"))
      m.preds.push_back(p.get<std::string>());
    spec.kind = std::move(m);
  } else {
    throw ParseError("mask.kind must be independent-hide, hide-names or "
                     "hide-predicates");
  }
  return spec;
}

}  // namespace

std::string toml_to_json(const std::string& toml_text) {
  TomlParser p{toml_text};
  return p.run().dump();
}

SimulationConfig load_simulation_config(const std::string& path) {
  std::string text = read_file(path);
  json doc;
  if (std::filesystem::path(path).extension() == ".json") {
    doc = json::parse(text);
  } else {
    TomlParser p{text};
    doc = p.run();
  }
  std::string base_dir = std::filesystem::path(path).parent_path().string();
  if (base_dir.empty()) base_dir = ".";

  if (doc.contains("rng")) {
    std::string rng = doc.at("rng").get<std::string>();
    if (rng != "xoshiro256**")
      throw ParseError("unsupported rng '" + rng + "' (use \"xoshiro256**\")");
  }

  SimulationConfig cfg;
  cfg.world = world_from_node(doc.at("world"));
  cfg.mask = mask_from_node(doc.at("mask"));
  cfg.kb = kb_from_node(doc.at("kb"), base_dir);
  if (doc.at("query").contains("path"))
    cfg.query = parse_query(read_file(
        (std::filesystem::path(base_dir) /
         doc.at("query").at("path").get<std::string>()).string()));
  else
    cfg.query = parse_query(doc.at("query").at("inline").get<std::string>());
  check_arities(cfg.kb, cfg.query);

  const json& learn = doc.at("learn");
  cfg.learn.k = learn.at("k").get<size_t>();
  if (learn.contains("z")) cfg.learn.z = learn.at("z").get<int>();
  cfg.learn.tuple_cap = learn.value("tuple_cap", size_t{0});
  cfg.learn.pad_fresh = learn.value("pad_fresh", true);

  const json& cal = doc.at("calibration");
  cfg.gamma = cal.at("gamma").get<double>();
  cfg.delta = cal.at("delta").get<double>();
  cfg.trials = cal.at("trials").get<int>();
  return cfg;
}

}  // namespace pacfol
