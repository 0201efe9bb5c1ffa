#include "tamed/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tamed {

PlaneRotationModel AnalyticParams::plane_model() const {
  PlaneRotationModel m;
  m.rotation_weight = n;
  m.f0 = f0;
  m.radius = R;
  m.points = N;
  return m;
}

TamingData ProblemConfig::taming() const {
  TamingData t;
  t.rank = rank;
  t.v = v;
  return t;
}

Window ProblemConfig::window() const {
  return Window::slab(v, window_lo, window_hi);
}

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(const std::string& s, int line, const char* what) {
  std::string t = trim(s);
  std::int64_t value = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || p != t.data() + t.size())
    fail(line, std::string("expected an integer for ") + what + ", got '" + t + "'");
  return value;
}

double parse_real(const std::string& s, int line, const char* what) {
  std::string t = trim(s);
  char* end = nullptr;
  double value = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || t.empty())
    fail(line, std::string("expected a real number for ") + what + ", got '" + t + "'");
  return value;
}

Rat parse_rat(const std::string& s, int line, const char* what) {
  try {
    return parse_rational(s);
  } catch (const TamedError& e) {
    fail(line, std::string("bad rational for ") + what + ": " + e.what());
  }
}

// Splits on commas at parenthesis depth zero.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

Weight parse_weight_tuple(const std::string& s, int rank, int line) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    fail(line, "expected a weight tuple like (1,-2), got '" + t + "'");
  std::string inner = t.substr(1, t.size() - 2);
  Weight w;
  for (const auto& part : split_top_level(inner))
    w.push_back(parse_int(part, line, "weight coordinate"));
  if (static_cast<int>(w.size()) != rank)
    fail(line, "weight tuple " + t + " has " + std::to_string(w.size()) +
                   " coordinates, expected rank " + std::to_string(rank));
  return w;
}

// "(1,0) deg -1" -> weight + degree (default 0).
NormalLine parse_normal_item(const std::string& s, int rank, int line) {
  std::string t = trim(s);
  auto close = t.find(')');
  if (close == std::string::npos)
    fail(line, "expected a weight tuple in normal_weights");
  NormalLine nl;
  nl.weight = parse_weight_tuple(t.substr(0, close + 1), rank, line);
  std::string rest = trim(t.substr(close + 1));
  if (!rest.empty()) {
    if (rest.rfind("deg", 0) != 0)
      fail(line, "unexpected trailing text after normal weight: '" + rest + "'");
    nl.degree = parse_int(rest.substr(3), line, "normal weight degree");
  }
  return nl;
}

// "weight (0), parity +, rank 1[, twist 2]"
ModuleSummand parse_summand(const std::string& s, int rank, int line) {
  ModuleSummand m;
  bool have_weight = false, have_parity = false, have_rank = false;
  for (const auto& raw : split_top_level(s)) {
    std::string part = trim(raw);
    if (part.rfind("weight", 0) == 0) {
      m.weight = parse_weight_tuple(part.substr(6), rank, line);
      have_weight = true;
    } else if (part.rfind("parity", 0) == 0) {
      std::string p = trim(part.substr(6));
      if (p == "+")
        m.parity = +1;
      else if (p == "-")
        m.parity = -1;
      else
        fail(line, "parity must be + or -, got '" + p + "'");
      have_parity = true;
    } else if (part.rfind("rank", 0) == 0) {
      m.rank = parse_int(part.substr(4), line, "summand rank");
      if (m.rank < 1) fail(line, "summand rank must be positive");
      have_rank = true;
    } else if (part.rfind("twist", 0) == 0) {
      m.twist_degree = parse_int(part.substr(5), line, "summand twist");
    } else {
      fail(line, "unknown summand field '" + part + "'");
    }
  }
  if (!have_weight || !have_parity || !have_rank)
    fail(line, "summand needs weight, parity and rank");
  return m;
}

struct Section {
  enum Kind { Top, Component, Table, Analytic } kind = Top;
  std::string label;
};

}  // namespace

ProblemConfig parse_config(const std::string& text) {
  ProblemConfig cfg;
  bool have_rank = false, have_v = false, have_window = false;
  Section section;
  FixedComponent* comp = nullptr;
  LocalIndexTable* table = nullptr;
  AnalyticParams analytic;
  bool analytic_seen = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;

    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      std::string head = trim(s.substr(1, s.size() - 2));
      if (head.rfind("component", 0) == 0) {
        std::string label = trim(head.substr(9));
        if (label.empty()) fail(line, "component section needs a label");
        for (const auto& c : cfg.components)
          if (c.label == label) fail(line, "duplicate component '" + label + "'");
        cfg.components.push_back(FixedComponent{});
        comp = &cfg.components.back();
        comp->label = label;
        section = {Section::Component, label};
      } else if (head.rfind("table", 0) == 0) {
        std::string label = trim(head.substr(5));
        if (label.empty()) fail(line, "table section needs a component label");
        bool known = false;
        for (const auto& c : cfg.components) known |= (c.label == label);
        if (!known)
          fail(line, "table refers to undeclared component '" + label + "'");
        table = &cfg.tables[label];
        section = {Section::Table, label};
      } else if (head == "analytic") {
        if (analytic_seen) fail(line, "duplicate [analytic] section");
        analytic_seen = true;
        section = {Section::Analytic, ""};
      } else {
        fail(line, "unknown section '" + head + "'");
      }
      continue;
    }

    auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");

    switch (section.kind) {
      case Section::Top: {
        if (key == "rank") {
          cfg.rank = static_cast<int>(parse_int(value, line, "rank"));
          if (cfg.rank < 1) fail(line, "rank must be >= 1");
          have_rank = true;
        } else if (key == "v") {
          if (!have_rank) fail(line, "rank must come before v");
          for (const auto& part : split_top_level(value))
            cfg.v.push_back(parse_rat(part, line, "taming coordinate"));
          if (static_cast<int>(cfg.v.size()) != cfg.rank)
            fail(line, "v must have rank entries");
          have_v = true;
        } else if (key == "window") {
          auto colon = value.find(':');
          if (colon == std::string::npos)
            fail(line, "window must be 'LO : HI'");
          cfg.window_lo = parse_rat(value.substr(0, colon), line, "window lo");
          cfg.window_hi = parse_rat(value.substr(colon + 1), line, "window hi");
          if (cfg.window_lo > cfg.window_hi)
            fail(line, "window lo exceeds hi");
          have_window = true;
        } else {
          fail(line, "unknown key '" + key + "'");
        }
        break;
      }
      case Section::Component: {
        if (!have_rank || !have_v) fail(line, "components must follow rank and v");
        if (key == "dim") {
          comp->dim = static_cast<int>(parse_int(value, line, "dim"));
          if (comp->dim < 0 || comp->dim % 2 != 0)
            fail(line, "component " + comp->label + ": dim must be even and >= 0");
        } else if (key == "genus") {
          comp->genus = parse_int(value, line, "genus");
          if (comp->genus < 0)
            fail(line, "component " + comp->label + ": genus must be >= 0");
        } else if (key == "normal_weights") {
          for (const auto& part : split_top_level(value))
            comp->normal_weights.push_back(
                parse_normal_item(part, cfg.rank, line));
        } else if (key == "summand") {
          comp->summands.push_back(parse_summand(value, cfg.rank, line));
        } else {
          fail(line, "unknown component key '" + key + "'");
        }
        break;
      }
      case Section::Table: {
        if (key.rfind("weight", 0) != 0)
          fail(line, "table entries look like: weight (...) = <integer>");
        Weight w = parse_weight_tuple(key.substr(6), cfg.rank, line);
        table->values[w] = Int(parse_int(value, line, "table value"));
        break;
      }
      case Section::Analytic: {
        if (key == "model") {
          if (value != "plane_rotation")
            fail(line, "unknown analytic model '" + value + "'");
          analytic.model = value;
        } else if (key == "n") {
          analytic.n = static_cast<int>(parse_int(value, line, "n"));
        } else if (key == "f0") {
          analytic.f0 = parse_real(value, line, "f0");
        } else if (key == "R") {
          analytic.R = parse_real(value, line, "R");
        } else if (key == "N") {
          analytic.N = static_cast<int>(parse_int(value, line, "N"));
        } else if (key == "tol") {
          analytic.tol = parse_real(value, line, "tol");
        } else {
          fail(line, "unknown analytic key '" + key + "'");
        }
        break;
      }
    }
  }

  if (!have_rank) throw ConfigError("config: missing 'rank'");
  if (!have_v) throw ConfigError("config: missing 'v'");
  if (!have_window) throw ConfigError("config: missing 'window'");
  if (analytic_seen) cfg.analytic = analytic;

  // Semantic validation with field paths.
  try {
    cfg.taming().validate();
  } catch (const TamedError& e) {
    throw ConfigError(std::string("v: ") + e.what());
  }
  for (const auto& c : cfg.components) {
    if (c.dim != 2 && c.genus != 0)
      throw ConfigError("component " + c.label + ": genus is only meaningful for dim 2");
    for (const auto& s : c.summands) {
      if (s.parity != 1 && s.parity != -1)
        throw ConfigError("component " + c.label + ": bad summand parity");
    }
    std::vector<Weight> raw;
    for (const auto& nl : c.normal_weights) raw.push_back(nl.weight);
    try {
      orient_normal_weights(raw, cfg.v);
    } catch (const TamedError& e) {
      throw ConfigError("component " + c.label + ": " + e.what());
    }
  }
  if (cfg.analytic) {
    try {
      cfg.analytic->plane_model().validate();
    } catch (const TamedError& e) {
      throw ConfigError(std::string("analytic: ") + e.what());
    }
    if (!(cfg.analytic->tol > 0))
      throw ConfigError("analytic: tol must be positive");
  }
  return cfg;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace tamed
