#include "henson/roster_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace henson {

namespace {

[[noreturn]] void config_error(const std::string& source, int line,
                               const std::string& message) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + message);
}

int parse_int(const std::string& token, const std::string& source, int line) {
  try {
    size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    config_error(source, line, "expected an integer, got \"" + token + "\"");
  }
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& source) {
  RunConfig config;
  bool saw_n = false, saw_stages = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (tokens[0] == "n" || tokens[0] == "stages" ||
        tokens[0] == "folkman_max_vertices") {
      if (tokens.size() != 3 || tokens[1] != "=")
        config_error(source, line_no, "expected \"" + tokens[0] + " = <value>\"");
      const int value = parse_int(tokens[2], source, line_no);
      if (tokens[0] == "n") { config.n = value; saw_n = true; }
      else if (tokens[0] == "stages") { config.stages = value; saw_stages = true; }
      else config.folkman_max_vertices = value;
      continue;
    }

    if (tokens[0] == "adversary") {
      if (tokens.size() < 3)
        config_error(source, line_no, "expected \"adversary <index> <strategy> ...\"");
      AdversarySpec spec;
      spec.index = parse_int(tokens[1], source, line_no);
      spec.strategy = tokens[2];
      for (size_t i = 3; i < tokens.size(); ++i) {
        const std::string& token = tokens[i];
        if (token.rfind("delay=", 0) == 0) {
          spec.delay = parse_int(token.substr(6), source, line_no);
          continue;
        }
        if (token == "red" || token == "blue") {
          spec.color = parse_color(token);
          continue;
        }
        spec.elements.push_back(parse_int(token, source, line_no));
      }
      if (spec.strategy == "color_chaser" || spec.strategy == "greedy_copier") {
        bool has_color = false;
        for (size_t i = 3; i < tokens.size(); ++i)
          if (tokens[i] == "red" || tokens[i] == "blue") has_color = true;
        if (!has_color)
          config_error(source, line_no, spec.strategy + " needs a color (red|blue)");
      } else if (spec.strategy != "constant_set" && spec.strategy != "finite_set") {
        config_error(source, line_no, "unknown strategy \"" + spec.strategy + "\"");
      }
      config.roster.push_back(std::move(spec));
      continue;
    }

    config_error(source, line_no, "unrecognized directive \"" + tokens[0] + "\"");
  }

  if (!saw_n) config_error(source, line_no + 1, "missing \"n = <value>\"");
  if (!saw_stages) config_error(source, line_no + 1, "missing \"stages = <value>\"");
  try {
    validate_config(config);
  } catch (const std::exception& err) {
    config_error(source, line_no + 1, err.what());
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str(), path);
}

}  // namespace henson
