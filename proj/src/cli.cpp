#include "dessin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dessin/error.hpp"
#include "dessin/io.hpp"

namespace dessin::cli {

namespace {

using io::json;

struct Options {
  std::vector<std::string> inputs;
  std::string patterns;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::string output;
};

// Collects per-input results; in structured mode everything is written as
// one envelope at the end so every subcommand shares the same schema.
class Emitter {
public:
  Emitter(std::string command, bool structured, std::ostream &out)
      : command_(std::move(command)), structured_(structured), out_(out) {}

  bool structured() const { return structured_; }
  std::ostream &text() { return out_; }
  void add(json result) { results_.push_back(std::move(result)); }

  int finish(int code) {
    if (structured_)
      out_ << json{{"command", command_},
                   {"exit_code", code},
                   {"results", results_}}
                  .dump(2)
           << '\n';
    return code;
  }

private:
  std::string command_;
  bool structured_;
  std::ostream &out_;
  json results_ = json::array();
};

// Exit code and message for an exception raised while handling one input.
std::pair<int, std::string> classify(std::exception const &e) {
  if (dynamic_cast<parse_error const *>(&e))
    return {parse_failure, std::string("parse error: ") + e.what()};
  if (dynamic_cast<validation_error const *>(&e))
    return {invalid, std::string("invalid: ") + e.what()};
  if (dynamic_cast<error const *>(&e))
    return {parse_failure, std::string("error: ") + e.what()};
  return {internal, std::string("internal error: ") + e.what()};
}

int worst(int a, int b) {
  // parse errors outrank validation failures; internal errors outrank both.
  auto rank = [](int c) {
    switch (c) {
    case internal:
      return 3;
    case parse_failure:
      return 2;
    case invalid:
      return 1;
    default:
      return 0;
    }
  };
  return rank(b) > rank(a) ? b : a;
}

std::vector<ExtendingPattern> resolve_patterns(std::string const &list) {
  std::vector<std::string> names;
  if (list.empty()) {
    names = default_pattern_names();
  } else {
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty())
        names.push_back(item);
  }
  if (names.empty())
    throw validation_error("empty pattern list");
  auto search = io::pattern_search_path();
  std::vector<ExtendingPattern> out;
  for (auto const &name : names)
    out.push_back(io::resolve_pattern(name, search));
  return out;
}

json dessin_json(Dessin const &d) {
  return {{"degree", d.degree()},
          {"x", print_cycles(d.x())},
          {"y", print_cycles(d.y())}};
}

bool looks_like_pattern(std::string const &path, std::string const &text) {
  if (std::filesystem::path(path).extension() == ".pattern")
    return true;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line.compare(first, 5, "name:") == 0)
      return true;
  }
  return false;
}

int cmd_validate(Options const &opt, Emitter &em) {
  int code = ok;
  for (auto const &path : opt.inputs) {
    json result{{"input", path}};
    try {
      std::string text = io::read_file(path);
      if (looks_like_pattern(path, text)) {
        result["kind"] = "pattern";
        auto check =
            validate_pattern(io::parse_pattern(text), opt.trials, opt.seed);
        result["status"] = check.ok ? "ok" : "invalid";
        result["failures"] = check.failures;
        result["warnings"] = check.warnings;
        if (!check.ok)
          code = worst(code, invalid);
        if (!em.structured()) {
          em.text() << path << ": "
                    << (check.ok ? "ok" : "invalid: " + check.failures.front())
                    << '\n';
          for (auto const &w : check.warnings)
            em.text() << path << ": warning: " << w << '\n';
        }
      } else {
        result["kind"] = "dessin";
        io::parse_dessin(text);
        result["status"] = "ok";
        if (!em.structured())
          em.text() << path << ": ok\n";
      }
    } catch (std::exception const &e) {
      auto [c, msg] = classify(e);
      code = worst(code, c);
      result["status"] = c == invalid ? "invalid" : "error";
      result["message"] = msg;
      if (!em.structured())
        em.text() << path << ": " << msg << '\n';
    }
    em.add(std::move(result));
  }
  return code;
}

int cmd_report(Options const &opt, Emitter &em) {
  auto patterns = resolve_patterns(opt.patterns);
  int code = ok;
  bool first = true;
  for (auto const &path : opt.inputs) {
    try {
      auto r = report(io::load_dessin(path), patterns, path);
      if (em.structured()) {
        em.add(io::report_to_json(r));
      } else {
        if (!first)
          em.text() << '\n';
        em.text() << io::report_to_text(r);
      }
    } catch (std::exception const &e) {
      auto [c, msg] = classify(e);
      code = worst(code, c);
      if (em.structured())
        em.add({{"dessin", path}, {"error", msg}});
      else
        em.text() << (first ? "" : "\n") << "dessin: " << path << '\n'
                  << "error: " << msg << '\n';
    }
    first = false;
  }
  return code;
}

int cmd_distinguish(Options const &opt, Emitter &em) {
  if (opt.inputs.size() != 2)
    throw validation_error("distinguish takes exactly two dessin files");
  auto patterns = resolve_patterns(opt.patterns);
  Dessin a = io::load_dessin(opt.inputs[0]);
  Dessin b = io::load_dessin(opt.inputs[1]);
  Verdict v = distinguish(a, b, patterns);
  if (em.structured()) {
    json j = io::verdict_to_json(v);
    j["inputs"] = opt.inputs;
    em.add(std::move(j));
  } else {
    em.text() << io::verdict_to_text(v);
  }
  return v.separated ? ok : not_separated;
}

int cmd_apply(Options const &opt, Emitter &em) {
  if (opt.inputs.size() != 1)
    throw validation_error("apply takes exactly one dessin file");
  if (opt.patterns.empty())
    throw validation_error("apply needs --patterns");
  auto patterns = resolve_patterns(opt.patterns);
  Dessin result = apply_sequence(patterns, io::load_dessin(opt.inputs[0]));
  if (!opt.output.empty()) {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file)
      throw error("cannot write " + opt.output);
    file << io::write_dessin(result);
  }
  if (em.structured())
    em.add({{"input", opt.inputs[0]}, {"dessin", dessin_json(result)}});
  else if (opt.output.empty())
    em.text() << io::write_dessin(result);
  return ok;
}

int cmd_patterns(Options const &opt, Emitter &em) {
  auto search = io::pattern_search_path();
  if (!opt.inputs.empty()) {
    for (auto const &name : opt.inputs) {
      auto p = io::resolve_pattern(name, search);
      if (em.structured())
        em.add({{"name", p.name}, {"pattern", io::write_pattern(p)}});
      else
        em.text() << io::write_pattern(p);
    }
    return ok;
  }
  auto list = [&](ExtendingPattern const &p, std::string const &source) {
    if (em.structured())
      em.add({{"name", p.name}, {"degree", p.degree()}, {"source", source}});
    else
      em.text() << p.name << "\tdegree=" << p.degree() << '\t' << source
                << '\n';
  };
  for (auto const &name : builtin_names())
    list(builtin(name), "builtin");
  for (auto const &dir : search) {
    if (!std::filesystem::is_directory(dir))
      continue;
    std::vector<std::filesystem::path> files;
    for (auto const &entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".pattern")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (auto const &f : files)
      list(io::load_pattern(f), f.string());
  }
  return ok;
}

int cmd_canon(Options const &opt, Emitter &em) {
  for (auto const &path : opt.inputs) {
    Dessin c = io::load_dessin(path).canonical_form();
    if (em.structured())
      em.add({{"input", path}, {"dessin", dessin_json(c)}});
    else
      em.text() << io::write_dessin(c);
  }
  return ok;
}

int cmd_iso(Options const &opt, Emitter &em) {
  if (opt.inputs.size() != 2)
    throw validation_error("iso takes exactly two dessin files");
  bool iso = are_isomorphic(io::load_dessin(opt.inputs[0]),
                            io::load_dessin(opt.inputs[1]));
  if (em.structured())
    em.add({{"inputs", opt.inputs}, {"isomorphic", iso}});
  else
    em.text() << (iso ? "isomorphic" : "not isomorphic") << '\n';
  return ok;
}

int cmd_aut(Options const &opt, Emitter &em) {
  for (auto const &path : opt.inputs) {
    auto group = io::load_dessin(path).automorphism_group();
    std::vector<std::string> elements;
    for (auto const &g : group)
      elements.push_back(g.is_identity() ? "()" : print_cycles(g));
    if (em.structured()) {
      em.add({{"input", path}, {"order", group.size()}, {"elements", elements}});
    } else {
      em.text() << path << ": order " << group.size() << '\n';
      for (auto const &e : elements)
        em.text() << "  " << e << '\n';
    }
  }
  return ok;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Galois invariants of dessins d'enfants"};
  app.name("dessin");
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App *sub, bool with_patterns) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    if (with_patterns)
      sub->add_option("--patterns", opt.patterns,
                      "Comma-separated pattern names or files");
    sub->add_option("--seed", opt.seed, "Seed for randomized checks");
    sub->add_option("--trials", opt.trials, "Trials for pattern validation");
  };

  auto *validate = app.add_subcommand("validate", "Check dessin and pattern files");
  validate->add_option("files", opt.inputs)->required();
  common(validate, false);

  auto *report = app.add_subcommand("report", "Invariant report per dessin");
  report->add_option("files", opt.inputs)->required();
  common(report, true);

  auto *distinguish = app.add_subcommand(
      "distinguish", "Try to separate two dessins by invariants");
  distinguish->add_option("files", opt.inputs)->required()->expected(2);
  common(distinguish, true);

  auto *apply = app.add_subcommand(
      "apply", "Apply patterns to a dessin (last listed acts first)");
  apply->add_option("file", opt.inputs)->required()->expected(1);
  apply->add_option("-o,--output", opt.output, "Write the dessin here");
  common(apply, true);

  auto *patterns = app.add_subcommand("patterns", "List or print patterns");
  patterns->add_option("names", opt.inputs);
  common(patterns, false);

  auto *canon = app.add_subcommand("canon", "Canonical form of dessins");
  canon->add_option("files", opt.inputs)->required();
  common(canon, false);

  auto *iso = app.add_subcommand("iso", "Test two dessins for isomorphism");
  iso->add_option("files", opt.inputs)->required()->expected(2);
  common(iso, false);

  auto *aut = app.add_subcommand("aut", "Automorphism groups of dessins");
  aut->add_option("files", opt.inputs)->required();
  common(aut, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_failure;
  }

  CLI::App *sub = app.get_subcommands().front();
  Emitter em(sub->get_name(), opt.format == "structured", out);
  try {
    int code = ok;
    if (sub == validate)
      code = cmd_validate(opt, em);
    else if (sub == report)
      code = cmd_report(opt, em);
    else if (sub == distinguish)
      code = cmd_distinguish(opt, em);
    else if (sub == apply)
      code = cmd_apply(opt, em);
    else if (sub == patterns)
      code = cmd_patterns(opt, em);
    else if (sub == canon)
      code = cmd_canon(opt, em);
    else if (sub == iso)
      code = cmd_iso(opt, em);
    else if (sub == aut)
      code = cmd_aut(opt, em);
    return em.finish(code);
  } catch (std::exception const &e) {
    auto [code, msg] = classify(e);
    err << "dessin " << sub->get_name() << ": " << msg << '\n';
    if (em.structured())
      em.add({{"error", msg}});
    return em.finish(code);
  }
}

} // namespace dessin::cli
