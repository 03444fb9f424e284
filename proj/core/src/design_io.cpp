#include "udesign/design_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace udesign {

void write_design(std::ostream& out, const Design& u, DesignFormat format) {
  out << "design v=" << u.ground() << " b=" << u.block() << " p=" << u.prime().value() << '\n';
  if (format == DesignFormat::Dense) {
    out << "dense";
    for (Residue x : u.values()) out << ' ' << x;
    out << '\n';
    return;
  }
  out << "sparse\n";
  std::uint64_t rank = 0;
  for_each_subset(u.ground(), u.block(), [&](std::span<const std::uint32_t> s) {
    const Residue x = u[rank++];
    if (x == 0) return;
    for (std::size_t i = 0; i < s.size(); ++i) out << (i > 0 ? "," : "") << s[i];
    out << '=' << x << '\n';
  });
}

std::string format_design(const Design& u, DesignFormat format) {
  std::ostringstream out;
  write_design(out, u, format);
  return out.str();
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw DesignParseError("line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t x = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
    fail(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return x;
}

std::uint64_t parse_field(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key) fail(line, "expected '" + std::string(key) + "...'");
  return parse_number(token.substr(key.size()), line);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Design parse_design(std::string_view text) {
  if (text.empty() || text.back() != '\n') throw DesignParseError("missing trailing newline");

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  const auto header = split_ws(lines[0]);
  if (header.size() != 4 || header[0] != "design") {
    fail(1, "header must be 'design v=<v> b=<b> p=<p>'");
  }
  const std::uint64_t v = parse_field(header[1], "v=", 1);
  const std::uint64_t b = parse_field(header[2], "b=", 1);
  const std::uint64_t p_raw = parse_field(header[3], "p=", 1);
  if (v > kMaxGround) fail(1, "ground set too large");
  if (b < 1 || b > v) fail(1, "block size must satisfy 1 <= b <= v");
  if (p_raw >= Prime::kLimit || !is_prime(p_raw)) fail(1, "p must be a prime below 65536");
  const Prime p(p_raw);
  const auto vv = static_cast<std::uint32_t>(v);
  const auto bb = static_cast<std::uint32_t>(b);
  const std::uint64_t count = binomial(v, b);

  // Remaining content lines, skipping comments and blanks.
  std::vector<std::pair<std::size_t, std::string_view>> body;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = split_ws(lines[i]);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    body.emplace_back(i + 1, lines[i]);
  }
  if (body.empty()) fail(lines.size(), "missing 'dense' or 'sparse' section");

  const auto first = split_ws(body.front().second);
  FpVector values(count, 0);
  if (first.front() == "dense") {
    std::uint64_t filled = 0;
    bool skip_keyword = true;
    for (const auto& [line_no, line] : body) {
      for (std::string_view token : split_ws(line)) {
        if (skip_keyword) {
          skip_keyword = false;
          continue;
        }
        const std::uint64_t x = parse_number(token, line_no);
        if (x >= p.value()) fail(line_no, "value " + std::to_string(x) + " not reduced mod p");
        if (filled == count) fail(line_no, "more than C(v,b) values");
        values[filled++] = static_cast<Residue>(x);
      }
    }
    if (filled != count) {
      fail(body.back().first, "expected " + std::to_string(count) + " values, got " +
                                  std::to_string(filled));
    }
  } else if (first.front() == "sparse") {
    if (first.size() != 1) fail(body.front().first, "'sparse' must stand alone on its line");
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t k = 1; k < body.size(); ++k) {
      const auto [line_no, line] = body[k];
      const auto tokens = split_ws(line);
      if (tokens.size() != 1) fail(line_no, "expected 'e1,...,eb=value'");
      const std::string_view entry = tokens.front();
      const std::size_t eq = entry.find('=');
      if (eq == std::string_view::npos) fail(line_no, "missing '='");
      std::vector<std::uint32_t> elements;
      try {
        const Subset s = Subset::parse(entry.substr(0, eq), vv);
        elements.assign(s.elements().begin(), s.elements().end());
      } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
      }
      if (elements.size() != b) fail(line_no, "block must have exactly b elements");
      const std::uint64_t x = parse_number(entry.substr(eq + 1), line_no);
      if (x >= p.value()) fail(line_no, "value " + std::to_string(x) + " not reduced mod p");
      const std::uint64_t rank = colex_rank(elements);
      if (!seen.insert(rank).second) fail(line_no, "duplicate block");
      values[rank] = static_cast<Residue>(x);
    }
  } else {
    fail(body.front().first, "expected 'dense' or 'sparse'");
  }
  return Design(vv, bb, p, std::move(values));
}

Design read_design(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_design(text);
}

}  // namespace udesign
