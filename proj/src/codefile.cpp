#include "zshadow/codefile.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "zshadow/error.hpp"

namespace zshadow {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line out{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) out.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::int64_t to_int(std::string_view tok, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

std::int64_t header(const std::vector<Line>& lines, std::size_t idx, std::string_view key, int last_line) {
  if (idx >= lines.size()) throw ParseError("missing '" + std::string(key) + "' header", last_line + 1);
  const auto& l = lines[idx];
  if (l.tokens.size() != 2 || l.tokens[0] != key) {
    throw ParseError("expected '" + std::string(key) + " <int>'", l.number);
  }
  return to_int(l.tokens[1], l.number);
}

}  // namespace

LinearCode parse_code(std::string_view text) {
  const auto lines = tokenize(text);
  const int last = lines.empty() ? 0 : lines.back().number;
  const auto m = header(lines, 0, "m", 0);
  if (m < 1 || m > RingParams::kMaxExponent) {
    throw ParseError("m=" + std::to_string(m) + " outside [1, " + std::to_string(RingParams::kMaxExponent) + "]",
                     lines[0].number);
  }
  const RingParams p(static_cast<int>(m));
  const auto n = header(lines, 1, "n", lines[0].number);
  if (n < 1) throw ParseError("n must be >= 1", lines[1].number);
  const auto rows = header(lines, 2, "rows", lines[1].number);
  if (rows < 0) throw ParseError("rows must be >= 0", lines[2].number);
  if (lines.size() - 3 != static_cast<std::size_t>(rows)) {
    throw ParseError("header announces " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 3),
                     lines.size() > 3 + static_cast<std::size_t>(rows) ? lines[3 + rows].number : last);
  }
  std::vector<RingVector> gens;
  for (std::size_t r = 3; r < lines.size(); ++r) {
    const auto& l = lines[r];
    if (l.tokens.size() != static_cast<std::size_t>(n)) {
      throw ParseError("row has " + std::to_string(l.tokens.size()) + " components, expected " + std::to_string(n),
                       l.number);
    }
    std::vector<Element> comps;
    for (auto tok : l.tokens) {
      const auto v = to_int(tok, l.number);
      if (v < 0 || static_cast<std::uint64_t>(v) >= p.modulus()) {
        throw ParseError("component " + std::string(tok) + " outside [0, " + std::to_string(p.mask()) + "]", l.number);
      }
      comps.push_back(static_cast<Element>(v));
    }
    gens.push_back(RingVector::from_elements(p, std::move(comps)));
  }
  return LinearCode::canonicalize(p, static_cast<std::size_t>(n), gens);
}

LinearCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

std::string format_code(const LinearCode& code) {
  std::string out = "m " + std::to_string(code.params().exponent()) + "\n";
  out += "n " + std::to_string(code.length()) + "\n";
  out += "rows " + std::to_string(code.generators().size()) + "\n";
  for (const auto& g : code.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(g[i]);
    }
    out += '\n';
  }
  return out;
}

void write_code_file(const std::filesystem::path& path, const LinearCode& code) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << format_code(code);
}

}  // namespace zshadow
