#include "gfl/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace gfl {

namespace {

auto pair_count(Vertex n) -> std::size_t {
  return static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
}

void check_shape(Vertex n, unsigned k) {
  if (n < 1 || n > max_order)
    throw ParamError("vertex count " + std::to_string(n) + " outside 1.." +
                     std::to_string(max_order));
  if (k < 1 || k > max_palette)
    throw PaletteError("palette size " + std::to_string(k) + " outside 1.." +
                       std::to_string(max_palette));
}

void check_color(unsigned c, unsigned k) {
  if (c < 1 || c > k)
    throw PaletteError("color " + std::to_string(c) + " outside palette 1.." +
                       std::to_string(k));
}

// Splits on ASCII whitespace; keeps views into `text`.
class Tokenizer {
public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  auto next(std::string_view &tok) -> bool {
    while (pos_ < text_.size() && is_space(text_[pos_]))
      ++pos_;
    if (pos_ >= text_.size())
      return false;
    auto start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]))
      ++pos_;
    tok = text_.substr(start, pos_ - start);
    return true;
  }

private:
  static auto is_space(char c) -> bool {
    return c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

auto to_number(std::string_view tok, const char *what) -> unsigned long {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw FormatError(std::string("bad ") + what + " token '" + std::string(tok) + "'");
  return value;
}

} // namespace

ColoredCompleteGraph::ColoredCompleteGraph(Vertex n, unsigned k, Color fill) : n_(n), k_(k) {
  check_shape(n, k);
  check_color(fill, k);
  colors_.assign(pair_count(n), fill);
}

void ColoredCompleteGraph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw IndexError("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range for order " + std::to_string(n_));
  if (u == v)
    throw SelfLoopError("self-loop at vertex " + std::to_string(u) + " has no color");
}

auto ColoredCompleteGraph::color(Vertex u, Vertex v) const -> Color {
  check_pair(u, v);
  return at(u, v);
}

void ColoredCompleteGraph::set_color(Vertex u, Vertex v, Color c) {
  check_pair(u, v);
  check_color(c, k_);
  if (u > v)
    std::swap(u, v);
  colors_[index(u, v)] = c;
}

auto ColoredCompleteGraph::colors_present() const -> std::vector<Color> {
  std::vector<bool> seen(k_ + 1, false);
  for (auto c : colors_)
    seen[c] = true;
  std::vector<Color> out;
  for (unsigned c = 1; c <= k_; ++c)
    if (seen[c])
      out.push_back(static_cast<Color>(c));
  return out;
}

auto ColoredCompleteGraph::with_palette(unsigned k) const -> ColoredCompleteGraph {
  if (k < 1 || k > max_palette)
    throw PaletteError("palette size " + std::to_string(k) + " outside 1.." +
                       std::to_string(max_palette));
  for (auto c : colors_)
    check_color(c, k);
  ColoredCompleteGraph out = *this;
  out.k_ = k;
  return out;
}

auto ColoredCompleteGraph::relabel(std::span<const Vertex> perm) const -> ColoredCompleteGraph {
  if (perm.size() != n_)
    throw ParamError("permutation length does not match graph order");
  std::vector<bool> hit(n_, false);
  for (auto p : perm) {
    if (p >= n_ || hit[p])
      throw ParamError("relabel argument is not a permutation");
    hit[p] = true;
  }
  ColoredCompleteGraph out = *this;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) {
      Vertex a = perm[u], b = perm[v];
      if (a > b)
        std::swap(a, b);
      out.colors_[index(a, b)] = colors_[index(u, v)];
    }
  return out;
}

auto ColoredCompleteGraph::recolor(std::span<const Color> map, unsigned k) const
    -> ColoredCompleteGraph {
  if (map.size() <= k_)
    throw PaletteError("recolor map shorter than palette");
  ColoredCompleteGraph out = *this;
  out.k_ = k == 0 ? k_ : k;
  if (out.k_ > max_palette)
    throw PaletteError("palette size above " + std::to_string(max_palette));
  for (auto &c : out.colors_) {
    c = map[c];
    check_color(c, out.k_);
  }
  return out;
}

auto parse_gcg(std::string_view text) -> ColoredCompleteGraph {
  Tokenizer tokens(text);
  std::string_view tok;
  if (!tokens.next(tok) || tok != "gcg")
    throw FormatError("missing 'gcg' magic");
  if (!tokens.next(tok) || tok != "1")
    throw FormatError("unsupported gcg version");
  if (!tokens.next(tok))
    throw FormatError("missing vertex count");
  auto n = to_number(tok, "vertex count");
  if (!tokens.next(tok))
    throw FormatError("missing palette size");
  auto k = to_number(tok, "palette size");
  if (n < 1 || n > max_order)
    throw FormatError("vertex count outside 1.." + std::to_string(max_order));
  if (k < 1 || k > max_palette)
    throw FormatError("palette size outside 1.." + std::to_string(max_palette));

  ColoredCompleteGraph g(static_cast<Vertex>(n), static_cast<unsigned>(k), 1);
  const auto expected = g.edge_count();
  std::size_t seen = 0;
  Vertex u = 0, v = 1;
  while (tokens.next(tok)) {
    auto c = to_number(tok, "color");
    if (seen < expected) {
      if (c < 1 || c > k)
        throw PaletteError("color " + std::to_string(c) + " outside palette 1.." +
                           std::to_string(k));
      g.set_color(u, v, static_cast<Color>(c));
      if (++v == n) {
        ++u;
        v = u + 1;
      }
    }
    ++seen;
  }
  if (seen != expected)
    throw LengthError("expected " + std::to_string(expected) + " color entries, found " +
                      std::to_string(seen));
  return g;
}

auto serialize_gcg(const ColoredCompleteGraph &g) -> std::string {
  std::string out = "gcg 1\n" + std::to_string(g.order()) + " " + std::to_string(g.palette()) + "\n";
  out.reserve(out.size() + g.edge_count() * 3);
  auto entries = g.entries();
  std::size_t i = 0;
  char buf[4];
  for (Vertex u = 0; u + 1 < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v, ++i) {
      if (v != u + 1)
        out.push_back(' ');
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<unsigned>(entries[i]));
      out.append(buf, end);
    }
    out.push_back('\n');
  }
  return out;
}

auto read_gcg_file(const std::string &path) -> ColoredCompleteGraph {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_gcg(text);
}

void write_gcg_file(const std::string &path, const ColoredCompleteGraph &g) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path + "'");
  out << serialize_gcg(g);
  if (!out)
    throw Error("write to '" + path + "' failed");
}

} // namespace gfl
