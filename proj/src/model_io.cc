#include "hybridtext/model_io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <vector>

#include "hybridtext/errors.h"

namespace hybridtext {

namespace {

std::string join_rationals(const std::vector<Rational>& row, bool decimal) {
  std::string out;
  for (const auto& r : row) {
    if (!out.empty()) out.push_back(' ');
    out += decimal ? to_decimal_string(r, 6) : to_fraction_string(r);
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ModelFormatError("model line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_count(const std::string& text, std::size_t line_no) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    fail(line_no, "expected a count, got '" + text + "'");
  }
  return std::stoull(text);
}

Rational parse_exact(const std::string& text, std::size_t line_no) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    fail(line_no, "expected a rational, got '" + text + "'");
  }
}

bool parse_bool(const std::string& text, std::size_t line_no) {
  if (text == "true") return true;
  if (text == "false") return false;
  fail(line_no, "expected true or false, got '" + text + "'");
}

}  // namespace

void write_model(const Model& model, std::ostream& out) {
  out << "# hybridtext model\n";
  out << "format_version: " << Model::kFormatVersion << "\n";

  out << "\n[classes]\n";
  for (const auto& c : model.classes) out << c << '\n';

  const auto& m = model.mining;
  const auto& p = model.preprocess;
  out << "\n[config]\n";
  out << "min_support: " << to_fraction_string(m.min_support) << '\n';
  out << "min_confidence: " << to_fraction_string(m.min_confidence) << '\n';
  out << "max_set_size: " << (m.max_set_size ? std::to_string(*m.max_set_size) : "none") << '\n';
  out << "exclude_singletons: " << (m.exclude_singletons ? "true" : "false") << '\n';
  out << "min_keyword_freq: " << p.min_in_doc_frequency << '\n';
  out << "min_token_length: " << p.min_token_length << '\n';
  out << "plural_folding: " << (p.plural_folding ? "true" : "false") << '\n';

  out << "\n[stopwords]\n";
  for (const auto& w : p.stopwords) out << w << '\n';

  out << "\n[sets]\n";
  for (const auto& s : model.sets) {
    out << join_items(s.items) << '\t';
    for (std::size_t c = 0; c < s.per_class_count.size(); ++c) {
      out << (c ? " " : "") << s.per_class_count[c];
    }
    out << '\n';
  }

  out << "\n[priors]\n";
  for (std::size_t c = 0; c < model.class_count(); ++c) {
    out << model.classes[c] << '\t' << to_fraction_string(model.priors[c]) << '\t'
        << to_decimal_string(model.priors[c], 6) << '\n';
  }

  out << "\n[table]\n";
  for (std::size_t s = 0; s < model.set_count(); ++s) {
    out << join_items(model.sets[s].items) << '\t' << join_rationals(model.table[s], false) << '\t'
        << join_rationals(model.table[s], true) << '\n';
  }
}

std::string serialize_model(const Model& model) {
  std::ostringstream out;
  write_model(model, out);
  return out.str();
}

Model read_model(std::istream& in) {
  Model model;
  model.preprocess.stopwords.clear();
  std::map<std::string, std::string> config;
  std::vector<std::pair<std::string, Rational>> priors;
  std::vector<std::pair<std::string, std::vector<Rational>>> table;
  std::string section;
  bool saw_version = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section != "classes" && section != "config" && section != "stopwords" &&
          section != "sets" && section != "priors" && section != "table") {
        fail(line_no, "unknown section [" + section + "]");
      }
      if (!saw_version) fail(line_no, "format_version must precede all sections");
      continue;
    }

    if (section.empty()) {
      const std::string key = "format_version: ";
      if (line.rfind(key, 0) != 0) fail(line_no, "expected format_version");
      const std::string version = line.substr(key.size());
      if (version != std::to_string(Model::kFormatVersion)) {
        throw ModelFormatError("unsupported model format version '" + version + "' (expected " +
                               std::to_string(Model::kFormatVersion) + ")");
      }
      saw_version = true;
    } else if (section == "classes") {
      model.classes.push_back(line);
    } else if (section == "config") {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) fail(line_no, "expected 'key: value'");
      config[line.substr(0, colon)] = line.substr(colon + 2);
    } else if (section == "stopwords") {
      model.preprocess.stopwords.insert(line);
    } else if (section == "sets") {
      const auto fields = split(line, '\t');
      if (fields.size() != 2) fail(line_no, "set line needs items and counts");
      ItemsetCount set;
      set.items = split_words(fields[0]);
      for (const auto& count : split_words(fields[1])) {
        set.per_class_count.push_back(parse_count(count, line_no));
        set.support_count += set.per_class_count.back();
      }
      model.sets.push_back(std::move(set));
    } else if (section == "priors") {
      const auto fields = split(line, '\t');
      if (fields.size() != 3) fail(line_no, "prior line needs class, fraction and decimal");
      priors.emplace_back(fields[0], parse_exact(fields[1], line_no));
    } else if (section == "table") {
      const auto fields = split(line, '\t');
      if (fields.size() != 3) fail(line_no, "table line needs items, fractions and decimals");
      std::vector<Rational> row;
      for (const auto& value : split_words(fields[1])) row.push_back(parse_exact(value, line_no));
      table.emplace_back(fields[0], std::move(row));
    }
  }
  if (!saw_version) throw ModelFormatError("missing format_version");

  auto take = [&](const char* key) {
    auto it = config.find(key);
    if (it == config.end()) throw ModelFormatError(std::string("missing config key '") + key + "'");
    std::string value = it->second;
    config.erase(it);
    return value;
  };
  model.mining.min_support = parse_exact(take("min_support"), 0);
  model.mining.min_confidence = parse_exact(take("min_confidence"), 0);
  if (auto cap = take("max_set_size"); cap != "none") {
    model.mining.max_set_size = parse_count(cap, 0);
  }
  model.mining.exclude_singletons = parse_bool(take("exclude_singletons"), 0);
  model.preprocess.min_in_doc_frequency = parse_count(take("min_keyword_freq"), 0);
  model.preprocess.min_token_length = parse_count(take("min_token_length"), 0);
  model.preprocess.plural_folding = parse_bool(take("plural_folding"), 0);
  if (!config.empty()) {
    throw ModelFormatError("unknown config key '" + config.begin()->first + "'");
  }

  if (priors.size() != model.classes.size()) throw ModelFormatError("one prior per class expected");
  for (std::size_t c = 0; c < priors.size(); ++c) {
    if (priors[c].first != model.classes[c]) {
      throw ModelFormatError("prior for '" + priors[c].first + "' is out of class order");
    }
    model.priors.push_back(priors[c].second);
  }
  if (table.size() != model.sets.size()) throw ModelFormatError("one table row per set expected");
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (table[s].first != join_items(model.sets[s].items)) {
      throw ModelFormatError("table row '" + table[s].first + "' is out of set order");
    }
    model.table.push_back(std::move(table[s].second));
  }
  model.class_totals.assign(model.classes.size(), 0);
  for (const auto& s : model.sets) {
    for (std::size_t c = 0; c < s.per_class_count.size() && c < model.classes.size(); ++c) {
      model.class_totals[c] += static_cast<std::int64_t>(s.per_class_count[c]);
    }
  }

  try {
    model.mining.validate();
    model.preprocess.validate();
  } catch (const ConfigError& e) {
    throw ModelFormatError(std::string("invalid config: ") + e.what());
  }
  model.validate();
  return model;
}

void save_model(const Model& model, const std::filesystem::path& path) {
  const std::string text = serialize_model(model);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write model to '" + path.string() + "'");
    out << text;
    out.close();
    if (!out) {
      std::filesystem::remove(tmp);
      throw ConfigError("cannot write model to '" + path.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read model '" + path.string() + "'");
  return read_model(in);
}

}  // namespace hybridtext
