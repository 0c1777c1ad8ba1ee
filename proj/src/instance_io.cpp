#include "cht/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace cht {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  // No leading zeros except "0" itself.
  if (s.size() > 1 && s.front() == '0') return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next significant line split into tokens; empty when input is exhausted.
  std::vector<std::string_view> next() {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      auto tokens = split(line);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    ++line_;
    return {};
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  const std::string_view num = token.substr(0, slash);
  if (!is_integer_token(num)) return std::nullopt;
  if (num == "-0") return std::nullopt;
  mpz_class n(std::string(num), 10);
  if (slash == std::string_view::npos) return Rational(n);
  const std::string_view den = token.substr(slash + 1);
  if (!is_integer_token(den) || den.front() == '-') return std::nullopt;
  mpz_class d(std::string(den), 10);
  if (d <= 1) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

Instance parse_instance(std::string_view text) {
  LineReader in(text);

  auto header = in.next();
  if (header.size() != 2 || header[0] != "thrackle-instance") {
    throw ParseError(in.line(), "expected 'thrackle-instance v1'");
  }
  if (header[1] != "v1") throw ParseError(in.line(), "unsupported version '" + std::string(header[1]) + "'");

  auto count = in.next();
  if (count.size() != 2 || count[0] != "points") throw ParseError(in.line(), "expected 'points <n>'");
  const std::size_t n = parse_count(count[1], in.line());

  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto tok = in.next();
    if (tok.size() != 2) throw ParseError(in.line(), "expected '<x> <y>' for point " + std::to_string(i));
    auto x = parse_rational(tok[0]);
    auto y = parse_rational(tok[1]);
    if (!x || !y) {
      throw ParseError(in.line(), "malformed rational in '" + std::string(tok[0]) + " " +
                                      std::string(tok[1]) + "' (lowest terms required)");
    }
    pts.emplace_back(*x, *y);
  }
  const std::size_t points_line = in.line();
  PointSet points;
  try {
    points = PointSet(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(points_line, e.what());
  }

  auto hc = in.next();
  if (hc.size() != 2 || hc[0] != "hulls") throw ParseError(in.line(), "expected 'hulls <m>'");
  const std::size_t m = parse_count(hc[1], in.line());

  std::vector<std::vector<Index>> hulls;
  hulls.reserve(m);
  for (std::size_t h = 0; h < m; ++h) {
    auto tok = in.next();
    if (tok.empty()) throw ParseError(in.line(), "expected hull " + std::to_string(h));
    std::vector<Index> idx;
    for (auto t : tok) {
      const Index i = parse_count(t, in.line());
      if (i >= n) throw ParseError(in.line(), "point index " + std::to_string(i) + " out of range");
      idx.push_back(i);
    }
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(in.line(), "repeated point index in hull " + std::to_string(h));
    }
    hulls.push_back(std::move(idx));
  }
  if (!in.next().empty()) throw ParseError(in.line(), "trailing content after hulls");
  return Instance::build(std::move(points), hulls);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "thrackle-instance v1\n";
  out << "points " << inst.points.size() << '\n';
  for (const auto& p : inst.points.points()) out << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
  auto family = inst.family;
  std::sort(family.begin(), family.end());
  out << "hulls " << family.size() << '\n';
  for (const auto& h : family) {
    bool first = true;
    for (Index i : h.indices()) {
      if (!first) out << ' ';
      out << i;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cht
