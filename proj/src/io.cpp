#include "dessin/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "dessin/error.hpp"

namespace dessin::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// "key: value" lines; keys must be in `allowed` and appear at most once.
std::map<std::string, std::string>
parse_fields(std::string_view text,
             std::initializer_list<std::string_view> allowed) {
  std::map<std::string, std::string> fields;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected 'key: value'");
    std::string key(trim(line.substr(0, colon)));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw parse_error("line " + std::to_string(line_no) + ": unknown key '" +
                        key + "'");
    if (fields.count(key))
      throw parse_error("line " + std::to_string(line_no) + ": duplicate key '" +
                        key + "'");
    fields[key] = std::string(trim(line.substr(colon + 1)));
  }
  return fields;
}

std::string const &require(std::map<std::string, std::string> const &fields,
                           std::string const &key) {
  auto it = fields.find(key);
  if (it == fields.end())
    throw parse_error("missing '" + key + "'");
  return it->second;
}

std::size_t parse_degree(std::string const &text) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw parse_error("degree must be a positive integer, got '" + text + "'");
  std::size_t d = std::stoul(text);
  if (d == 0)
    throw parse_error("degree must be a positive integer, got '" + text + "'");
  return d;
}

std::string field_line(std::string_view key, std::string const &value) {
  std::string line(key);
  line += ':';
  if (!value.empty())
    line += ' ' + value;
  return line + '\n';
}

std::vector<CrossingWord> parse_word_map(std::string_view text, std::size_t m,
                                         std::string_view key) {
  std::vector<CrossingWord> words(m);
  std::vector<bool> seen(m, false);
  while (!text.empty()) {
    auto semi = text.find(';');
    std::string_view item = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{}
                                          : text.substr(semi + 1);
    if (item.empty())
      continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw parse_error(std::string(key) + ": expected '<edge>=<word>', got '" +
                        std::string(item) + "'");
    std::string edge_text(trim(item.substr(0, eq)));
    std::size_t edge = 0;
    try {
      edge = parse_degree(edge_text);
    } catch (parse_error const &) {
      throw parse_error(std::string(key) + ": bad edge '" + edge_text + "'");
    }
    if (edge > m)
      throw parse_error(std::string(key) + ": edge " + edge_text +
                        " outside 1.." + std::to_string(m));
    if (seen[edge - 1])
      throw parse_error(std::string(key) + ": edge " + edge_text +
                        " listed twice");
    seen[edge - 1] = true;
    words[edge - 1] = parse_word(trim(item.substr(eq + 1)));
  }
  return words;
}

std::string write_word_map(std::vector<CrossingWord> const &words) {
  std::string out;
  for (std::size_t b = 0; b < words.size(); ++b) {
    if (words[b].empty())
      continue;
    if (!out.empty())
      out += "; ";
    out += std::to_string(b + 1) + "=" + word_to_string(words[b]);
  }
  return out;
}

} // namespace

std::string read_file(std::filesystem::path const &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dessin parse_dessin(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json j;
    try {
      j = json::parse(body);
      std::size_t d = j.at("degree").get<std::size_t>();
      if (d == 0)
        throw parse_error("degree must be a positive integer");
      return Dessin(parse_cycles(j.at("x").get<std::string>(), d),
                    parse_cycles(j.at("y").get<std::string>(), d));
    } catch (json::exception const &e) {
      throw parse_error(std::string("structured dessin: ") + e.what());
    }
  }
  auto fields = parse_fields(text, {"degree", "x", "y"});
  std::size_t d = parse_degree(require(fields, "degree"));
  Permutation x = parse_cycles(require(fields, "x"), d);
  Permutation y = parse_cycles(require(fields, "y"), d);
  return Dessin(std::move(x), std::move(y));
}

std::string write_dessin(Dessin const &d) {
  return field_line("degree", std::to_string(d.degree())) +
         field_line("x", print_cycles(d.x())) +
         field_line("y", print_cycles(d.y()));
}

Dessin load_dessin(std::filesystem::path const &path) {
  return parse_dessin(read_file(path));
}

ExtendingPattern parse_pattern(std::string_view text) {
  auto fields =
      parse_fields(text, {"name", "degree", "xb", "yb", "wx", "wy"});
  std::string name = require(fields, "name");
  if (name.empty())
    throw parse_error("pattern name is empty");
  std::size_t m = parse_degree(require(fields, "degree"));
  Permutation xb = parse_cycles(require(fields, "xb"), m);
  Permutation yb = parse_cycles(require(fields, "yb"), m);
  auto wx = fields.count("wx") ? parse_word_map(fields["wx"], m, "wx")
                               : std::vector<CrossingWord>(m);
  auto wy = fields.count("wy") ? parse_word_map(fields["wy"], m, "wy")
                               : std::vector<CrossingWord>(m);
  return make_pattern(std::move(name), std::move(xb), std::move(yb),
                      std::move(wx), std::move(wy));
}

std::string write_pattern(ExtendingPattern const &p) {
  return field_line("name", p.name) +
         field_line("degree", std::to_string(p.degree())) +
         field_line("xb", print_cycles(p.xb)) +
         field_line("yb", print_cycles(p.yb)) +
         field_line("wx", write_word_map(p.wx)) +
         field_line("wy", write_word_map(p.wy));
}

ExtendingPattern load_pattern(std::filesystem::path const &path) {
  return parse_pattern(read_file(path));
}

std::vector<std::filesystem::path> pattern_search_path() {
  std::vector<std::filesystem::path> dirs;
  char const *env = std::getenv("DESSIN_PATTERN_PATH");
  if (!env)
    return dirs;
  std::string_view rest(env);
  while (!rest.empty()) {
    auto colon = rest.find(':');
    auto dir = rest.substr(0, colon);
    if (!dir.empty())
      dirs.emplace_back(dir);
    rest = colon == std::string_view::npos ? std::string_view{}
                                           : rest.substr(colon + 1);
  }
  return dirs;
}

ExtendingPattern
resolve_pattern(std::string const &spec,
                std::vector<std::filesystem::path> const &search_path) {
  if (is_builtin(spec))
    return builtin(spec);
  if (std::filesystem::is_regular_file(spec))
    return load_pattern(spec);
  for (auto const &dir : search_path) {
    auto candidate = dir / (spec + ".pattern");
    if (std::filesystem::is_regular_file(candidate))
      return load_pattern(candidate);
  }
  throw validation_error("unknown pattern '" + spec + "'");
}

json fingerprint_to_json(GroupFingerprint const &fp) {
  // Orders exceed 64 bits, so they travel as decimal strings.
  return {{"order", fp.order.str()},
          {"degree", fp.degree},
          {"transitive", fp.transitive},
          {"in_alternating", fp.in_alternating},
          {"rank", fp.rank}};
}

GroupFingerprint fingerprint_from_json(json const &j) {
  GroupFingerprint fp;
  fp.order = BigInt(j.at("order").get<std::string>());
  fp.degree = j.at("degree").get<std::size_t>();
  fp.transitive = j.at("transitive").get<bool>();
  fp.in_alternating = j.at("in_alternating").get<bool>();
  fp.rank = j.at("rank").get<std::size_t>();
  return fp;
}

namespace {

std::string class_to_text(ClassTag const &c) {
  return c.type.to_string() + (c.half > 0 ? "+" : c.half < 0 ? "-" : "");
}

json cycle_type_to_json(CycleType const &t) { return t.parts; }

CycleType cycle_type_from_json(json const &j) {
  return CycleType{j.get<std::vector<std::size_t>>()};
}

} // namespace

std::string report_to_text(InvariantReport const &r) {
  std::ostringstream os;
  os << "dessin: " << r.dessin_id << '\n'
     << "degree: " << r.degree << '\n'
     << "valency: " << r.valency.to_string() << '\n'
     << "genus: " << r.genus << '\n'
     << "aut_order: " << r.aut_order << '\n'
     << "monodromy: " << r.monodromy.to_string() << '\n';
  for (auto const &[name, fp] : r.per_pattern)
    os << "M_" << name << ": " << fp.to_string() << '\n';
  os << "nielsen: lcm=" << r.nielsen.lcm
     << " resolved=" << (r.nielsen.resolved ? "true" : "false") << '\n';
  for (auto const &[entry, count] : r.nielsen.entries)
    os << "nielsen_entry: " << class_to_text(entry.classes[0]) << ' '
       << class_to_text(entry.classes[1]) << ' '
       << class_to_text(entry.classes[2]) << " x" << count << '\n';
  return os.str();
}

json report_to_json(InvariantReport const &r) {
  json patterns = json::array();
  for (auto const &[name, fp] : r.per_pattern)
    patterns.push_back({{"name", name}, {"fingerprint", fingerprint_to_json(fp)}});
  json entries = json::array();
  for (auto const &[entry, count] : r.nielsen.entries) {
    json classes = json::array();
    for (auto const &c : entry.classes)
      classes.push_back({{"type", cycle_type_to_json(c.type)}, {"half", c.half}});
    entries.push_back({{"classes", classes}, {"count", count}});
  }
  return {{"dessin", r.dessin_id},
          {"degree", r.degree},
          {"valency",
           {{"at0", cycle_type_to_json(r.valency.at0)},
            {"at1", cycle_type_to_json(r.valency.at1)},
            {"at_inf", cycle_type_to_json(r.valency.at_inf)}}},
          {"genus", r.genus},
          {"aut_order", r.aut_order},
          {"monodromy", fingerprint_to_json(r.monodromy)},
          {"patterns", patterns},
          {"nielsen",
           {{"lcm", r.nielsen.lcm},
            {"resolved", r.nielsen.resolved},
            {"entries", entries}}}};
}

InvariantReport report_from_json(json const &j) {
  InvariantReport r;
  r.dessin_id = j.at("dessin").get<std::string>();
  r.degree = j.at("degree").get<std::size_t>();
  auto const &v = j.at("valency");
  r.valency = {cycle_type_from_json(v.at("at0")),
               cycle_type_from_json(v.at("at1")),
               cycle_type_from_json(v.at("at_inf"))};
  r.genus = j.at("genus").get<std::size_t>();
  r.aut_order = j.at("aut_order").get<std::size_t>();
  r.monodromy = fingerprint_from_json(j.at("monodromy"));
  for (auto const &p : j.at("patterns"))
    r.per_pattern.emplace_back(p.at("name").get<std::string>(),
                               fingerprint_from_json(p.at("fingerprint")));
  auto const &n = j.at("nielsen");
  r.nielsen.lcm = n.at("lcm").get<std::uint64_t>();
  r.nielsen.resolved = n.at("resolved").get<bool>();
  for (auto const &e : n.at("entries")) {
    NielsenEntry entry;
    for (std::size_t i = 0; i < 3; ++i) {
      auto const &c = e.at("classes").at(i);
      entry.classes[i] = {cycle_type_from_json(c.at("type")),
                          c.at("half").get<int>()};
    }
    r.nielsen.entries[entry] = e.at("count").get<std::uint64_t>();
  }
  return r;
}

std::string verdict_to_text(Verdict const &v) {
  std::string out;
  for (auto const &item : v.items)
    out += item.invariant + ": " + to_string(item.status) + " (" +
           item.detail + ")\n";
  out += "verdict: " + v.summary() + '\n';
  return out;
}

json verdict_to_json(Verdict const &v) {
  json items = json::array();
  for (auto const &item : v.items)
    items.push_back({{"invariant", item.invariant},
                     {"status", to_string(item.status)},
                     {"detail", item.detail}});
  return {{"invariants", items},
          {"separated", v.separated},
          {"separators", v.separators()},
          {"summary", v.summary()}};
}

} // namespace dessin::io
