#include "braces/io.hpp"

#include <fstream>
#include <sstream>

#include "braces/constructions.hpp"

namespace braces {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!tokens(line).empty()) return true;
  }
  return false;
}

std::uint64_t positive(std::int64_t v, const char* what) {
  if (v <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Brace brace_from_rule(const std::string& family, const std::vector<std::int64_t>& params,
                      const AbelianGroup& group) {
  Brace b = [&] {
    if (family == "trivial") {
      if (!params.empty()) throw std::invalid_argument("rule trivial takes no parameters");
      return trivial_brace(group);
    }
    if (family == "Bpp" || family == "Bp2") {
      if (params.size() != 1) throw std::invalid_argument("rule " + family + " takes p");
      return bachiller_p2(positive(params[0], "p"), family == "Bpp" ? SmallKind::Bpp : SmallKind::Bp2);
    }
    const Family f = family_from_name(family);
    if (params.size() < 3) throw std::invalid_argument("rule " + family + " takes p q and parameters");
    std::vector<std::uint64_t> rest;
    for (std::size_t i = 2; i < params.size(); ++i) rest.push_back(positive(params[i], "parameter"));
    return coarse_family(positive(params[0], "p"), positive(params[1], "q"), f, std::move(rest)).brace;
  }();
  if (!(b.group() == group))
    throw std::invalid_argument("rule " + family + " does not live on the declared group");
  return b;
}

Brace parse_brace(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno) || tokens(line) != std::vector<std::string>{"brace", "v1"})
    throw ParseError("line 1: expected header 'brace v1'");

  if (!next_line(in, line, lineno)) throw ParseError("missing 'group' line");
  auto tok = tokens(line);
  if (tok[0] != "group") throw ParseError("line " + std::to_string(lineno) + ": expected 'group'");
  std::vector<std::uint32_t> inv;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    const auto v = to_int(tok[i], "invariant");
    if (v < 2 || v > 1'000'000) throw ParseError("line " + std::to_string(lineno) + ": invariant out of range");
    inv.push_back(static_cast<std::uint32_t>(v));
  }
  std::uint64_t order = 1;
  for (auto v : inv) {
    order *= v;
    if (order > 1'000'000) throw ParseError("group order too large");
  }
  const AbelianGroup group(inv);

  if (!next_line(in, line, lineno)) throw ParseError("missing 'rule' or 'table' line");
  tok = tokens(line);
  if (tok[0] == "rule") {
    if (tok.size() < 2) throw ParseError("line " + std::to_string(lineno) + ": rule without family");
    std::vector<std::int64_t> params;
    for (std::size_t i = 2; i < tok.size(); ++i) params.push_back(to_int(tok[i], "rule parameter"));
    if (next_line(in, line, lineno)) throw ParseError("line " + std::to_string(lineno) + ": trailing content");
    try {
      return brace_from_rule(tok[1], params, group);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (tok != std::vector<std::string>{"table"})
    throw ParseError("line " + std::to_string(lineno) + ": expected 'rule' or 'table'");
  const Index n = group.order();
  std::vector<Index> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (Index row = 0; row < n; ++row) {
    if (!next_line(in, line, lineno)) throw ParseError("table truncated at row " + std::to_string(row));
    tok = tokens(line);
    if (tok.size() != n)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
    for (const auto& t : tok) {
      const auto v = to_int(t, "table entry");
      if (v < 0 || v >= static_cast<std::int64_t>(n))
        throw ParseError("line " + std::to_string(lineno) + ": entry " + t + " out of range");
      table.push_back(static_cast<Index>(v));
    }
  }
  if (next_line(in, line, lineno)) throw ParseError("line " + std::to_string(lineno) + ": trailing content");
  return Brace::from_table(group, std::move(table));
}

Brace parse_brace(const std::string& text) {
  std::istringstream in(text);
  return parse_brace(in);
}

Brace read_brace_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_brace(in);
}

std::string serialize_brace(const Brace& b, bool force_table) {
  std::ostringstream out;
  out << "brace v1\ngroup";
  for (auto v : b.group().invariants()) out << ' ' << v;
  out << '\n';
  if (b.tag() && !force_table) {
    out << "rule " << b.tag()->family;
    for (auto v : b.tag()->params) out << ' ' << v;
    out << '\n';
    return out.str();
  }
  out << "table\n";
  const Index n = b.order();
  for (Index a = 0; a < n; ++a) {
    for (Index c = 0; c < n; ++c) out << (c ? " " : "") << b.mul(a, c);
    out << '\n';
  }
  return out.str();
}

void write_brace_file(const std::filesystem::path& path, const Brace& b, bool force_table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_brace(b, force_table);
}

}  // namespace braces
