#include "rectors/text_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rectors {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line.substr(0, line.find('#')));
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

[[noreturn]] void bad(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + why, {std::to_string(line)});
}

}  // namespace

RawCategory parse_fincat(std::string_view text) {
  RawCategory r;
  bool named = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto t = tokenize(line);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    if (kw == "category") {
      if (t.size() != 2) bad(no, "expected: category <name>");
      if (named) bad(no, "second category line");
      r.name = t[1];
      named = true;
    } else if (kw == "object") {
      if (t.size() != 2) bad(no, "expected: object <id>");
      r.objects.push_back(t[1]);
    } else if (kw == "morphism") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "->") bad(no, "expected: morphism <id> : <src> -> <tgt>");
      r.morphisms.push_back({t[1], t[3], t[5]});
    } else if (kw == "identity") {
      if (t.size() != 4 || t[2] != "=") bad(no, "expected: identity <obj> = <mor>");
      r.identities.emplace_back(t[1], t[3]);
    } else if (kw == "compose") {
      if (t.size() != 6 || t[2] != "." || t[4] != "=") bad(no, "expected: compose <g> . <f> = <h>");
      r.composites.push_back({t[1], t[3], t[5]});
    } else if (kw == "subset") {
      if (t.size() < 3 || t[2] != "=") bad(no, "expected: subset <name> = <id>...");
      r.subsets.push_back({t[1], std::vector<std::string>(t.begin() + 3, t.end())});
    } else {
      bad(no, "unknown keyword '" + kw + "'");
    }
  }
  return r;
}

FinCat read_fincat(std::string_view text, const Limits& limits) {
  return validate_category(parse_fincat(text), limits);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path, {path});
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

FinCat load_fincat(const std::string& path, const Limits& limits) { return read_fincat(read_file(path), limits); }

std::string write_fincat(const FinCat& c) {
  RawCategory r = to_raw(c);
  std::ostringstream out;
  out << "category " << (r.name.empty() ? "C" : r.name) << "\n";
  for (const auto& o : r.objects) out << "object " << o << "\n";
  for (const auto& m : r.morphisms) out << "morphism " << m.id << " : " << m.src << " -> " << m.tgt << "\n";
  for (const auto& [o, m] : r.identities) out << "identity " << o << " = " << m << "\n";
  for (const auto& e : r.composites) out << "compose " << e.g << " . " << e.f << " = " << e.h << "\n";
  for (const auto& s : r.subsets) {
    out << "subset " << s.name << " =";
    for (const auto& m : s.members) out << " " << m;
    out << "\n";
  }
  return out.str();
}

}  // namespace rectors
