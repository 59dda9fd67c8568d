#include "gfl/constructions.hpp"

#include <algorithm>
#include <limits>

#include "gfl/detect.hpp"
#include "gfl/errors.hpp"
#include "gfl/gallai.hpp"

namespace gfl {

namespace {

auto checked_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw ParamError("order overflows 64 bits");
  return a * b;
}

auto pow5(unsigned e) -> std::uint64_t {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i)
    r = checked_mul(r, 5);
  return r;
}

auto tag_of(char prefix, unsigned k) -> std::string { return std::string(1, prefix) + std::to_string(k); }

auto arrange(const Layout &layout, const std::vector<Blueprint> &by_type) -> std::vector<Blueprint> {
  std::vector<Blueprint> kids;
  kids.reserve(5);
  for (auto t : layout) {
    if (t >= by_type.size())
      throw ParamError("layout refers to part type " + std::to_string(t));
    kids.push_back(by_type[t]);
  }
  return kids;
}

auto pentagon_node(std::string tag, Color a, Color b, const Layout &layout,
                   const std::vector<Blueprint> &by_type) -> Blueprint {
  return Blueprint::node(std::move(tag), pentagon_coloring(a, b), arrange(layout, by_type));
}

auto mono(std::string tag, Vertex n, Color c) -> Blueprint {
  return Blueprint::leaf(std::move(tag), ColoredCompleteGraph::uniform(n, c, c));
}

void collect(const Blueprint &b, std::string_view tag, Blueprint::Path &cur,
             std::vector<Blueprint::Path> &out) {
  if (b.tag == tag)
    out.push_back(cur);
  for (unsigned i = 0; i < b.children.size(); ++i) {
    cur.push_back(i);
    collect(b.children[i], tag, cur, out);
    cur.pop_back();
  }
}

void flatten_into(const Blueprint &b, ColoredCompleteGraph &out, Vertex base) {
  if (b.is_leaf()) {
    for (Vertex u = 0; u < b.graph.order(); ++u)
      for (Vertex v = u + 1; v < b.graph.order(); ++v)
        out.set_color(base + u, base + v, b.graph.at(u, v));
    return;
  }
  std::vector<Vertex> offset(b.children.size() + 1, base);
  for (std::size_t i = 0; i < b.children.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<Vertex>(b.children[i].order());
  for (std::size_t i = 0; i < b.children.size(); ++i) {
    flatten_into(b.children[i], out, offset[i]);
    for (std::size_t j = i + 1; j < b.children.size(); ++j) {
      auto c = b.graph.at(static_cast<Vertex>(i), static_cast<Vertex>(j));
      for (Vertex u = offset[i]; u < offset[i + 1]; ++u)
        for (Vertex v = offset[j]; v < offset[j + 1]; ++v)
          out.set_color(u, v, c);
    }
  }
}

auto max_color(const Blueprint &b) -> unsigned {
  unsigned k = b.graph.palette();
  for (const auto &c : b.children)
    k = std::max(k, max_color(c));
  return k;
}

// ---- F2, even k ----

auto k4() -> Blueprint { return mono("G1", 4, 1); }

auto f2_even_g2() -> Blueprint {
  return Blueprint::node("G2", ColoredCompleteGraph::uniform(2, 2, 2), {k4(), k4()});
}

auto four_k2s() -> std::vector<Blueprint> {
  std::vector<Blueprint> v;
  for (Color c = 1; c <= 4; ++c)
    v.push_back(mono(tag_of('K', c), 2, c));
  return v;
}

auto a4_prime(const Layout &layout) -> Blueprint {
  auto types = four_k2s();
  types.push_back(mono("K1", 1, 1));
  return pentagon_node("A4'", 1, 2, layout, types);
}

auto a_j(unsigned j, const Layout &layout) -> Blueprint {
  auto types = four_k2s();
  types.push_back(mono(tag_of('K', j), 2, static_cast<Color>(j)));
  return pentagon_node(tag_of('A', j), 1, 2, layout, types);
}

auto f2_even_g4(const GadgetChoices &ch) -> Blueprint {
  if (ch.g4_slot >= 5)
    throw ParamError("G4 slot must be below 5");
  std::vector<Blueprint> g2s(5, f2_even_g2());
  g2s[ch.g4_slot] = a4_prime(ch.a4);
  return Blueprint::node("G4", pentagon_coloring(3, 4), std::move(g2s));
}

// Even step from k-2 colors to k >= 6: five copies, then two A'4 gadgets
// become A_{k-1} and A_k.
auto f2_even_step(const Blueprint &prev, unsigned k, const GadgetChoices &ch, unsigned s1,
                  unsigned s2) -> Blueprint {
  auto g = Blueprint::node(tag_of('G', k),
                           pentagon_coloring(static_cast<Color>(k - 1), static_cast<Color>(k)),
                           std::vector<Blueprint>(5, prev));
  auto sites = g.find("A4'");
  if (s1 >= sites.size() || s2 >= sites.size() || s1 == s2)
    throw ParamError("bad A'4 sites for step " + std::to_string(k));
  g = g.replaced(sites[s1], a_j(k - 1, ch.aj));
  return g.replaced(sites[s2], a_j(k, ch.aj));
}

// ---- F3 ----

auto k6() -> Blueprint { return mono("G1", 6, 1); }

auto k8(Color c5, Color tri) -> Blueprint { return Blueprint::leaf("K8", cycle_triangle_k8(c5, tri)); }

auto f3_g2() -> Blueprint {
  return Blueprint::node("G2", ColoredCompleteGraph::uniform(2, 2, 2), {k6(), k6()});
}

auto f3_g3(const GadgetChoices &ch) -> Blueprint {
  return pentagon_node("G3", 2, 3, ch.g3,
                       {k6(), Blueprint::leaf("G33", cycle_triangle_k8(2, 3))});
}

auto g1_sites(const Blueprint &b) -> std::vector<Blueprint::Path> { return b.find("G1"); }

auto site_index(const Blueprint &b, const Blueprint::Path &p) -> unsigned {
  auto all = g1_sites(b);
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end())
    throw InternalInconsistency("site is not a G1 leaf");
  return static_cast<unsigned>(it - all.begin());
}

// First G1 leaf whose parent is a G2 with two G1 children.
auto even_rule_site(const Blueprint &prev) -> Blueprint::Path {
  for (auto &p : g1_sites(prev)) {
    auto parent = p;
    parent.pop_back();
    const auto &par = prev.at(parent);
    if (par.tag == "G2" &&
        std::all_of(par.children.begin(), par.children.end(),
                    [](const Blueprint &c) { return c.tag == "G1"; }))
      return p;
  }
  throw InternalInconsistency("no unmodified G2 left for the even F3 step");
}

// First G1 leaf joined in color 2 to a G33 sibling, inside a G3 copy with no
// K8 replacement yet.
auto odd_rule_site(const Blueprint &prev) -> Blueprint::Path {
  for (auto &p : g1_sites(prev)) {
    auto parent = p;
    parent.pop_back();
    const auto &par = prev.at(parent);
    if (std::any_of(par.children.begin(), par.children.end(),
                    [](const Blueprint &c) { return c.tag == "K8"; }))
      continue;
    for (unsigned s = 0; s < par.children.size(); ++s)
      if (par.children[s].tag == "G33" && par.graph.at(p.back(), s) == 2)
        return p;
  }
  throw InternalInconsistency("no unmodified G1 next to G33 in color 2");
}

auto f3_even_step(const Blueprint &prev, unsigned k, const Blueprint::Path &site,
                  const Layout &layout) -> Blueprint {
  auto lo = prev.replaced(site, k8(2, static_cast<Color>(k - 1)));
  auto hi = prev.replaced(site, k8(2, static_cast<Color>(k)));
  return pentagon_node(tag_of('G', k), static_cast<Color>(k - 1), static_cast<Color>(k), layout,
                       {prev, lo, hi});
}

// Odd step to k >= 5 colors. The variants carry a C5 in color k-1 or k and a
// triangle in color 3. With `literal` set they carry a C5 in color 2 and a
// triangle in color k-1 or k instead.
auto f3_odd_step(const Blueprint &prev, unsigned k, const Blueprint::Path &site,
                 const Layout &layout, bool literal = false) -> Blueprint {
  auto variant = [&](unsigned j) {
    return literal ? k8(2, static_cast<Color>(j)) : k8(static_cast<Color>(j), 3);
  };
  auto lo = prev.replaced(site, variant(k - 1));
  auto hi = prev.replaced(site, variant(k));
  return pentagon_node(tag_of('G', k), static_cast<Color>(k - 1), static_cast<Color>(k), layout,
                       {prev, lo, hi});
}

auto f3_rule_path(const Blueprint &prev, unsigned k) -> Blueprint::Path {
  return k % 2 == 0 ? even_rule_site(prev) : odd_rule_site(prev);
}

// Stage k given the stage it is built from.
auto f3_from(const Blueprint &prev, unsigned k, const Blueprint::Path &site,
             const GadgetChoices &ch) -> Blueprint {
  if (k % 2 == 0)
    return f3_even_step(prev, k, site, ch.f3_even);
  return f3_odd_step(prev, k, site, k == 5 ? ch.f3_five : ch.f3_odd);
}

// Stage that step k is built from: G_{k-2} for even k and odd k >= 7, G3 for k = 5.
auto f3_source(unsigned k, const GadgetChoices &ch) -> Blueprint {
  if (k == 5)
    return blueprint_f3(3, ch);
  return blueprint_f3(k - 2, ch);
}

void check_k(bool ok, const std::string &what) {
  if (!ok)
    throw ParamError(what);
}

} // namespace

auto family_name(Family f) -> std::string_view {
  switch (f) {
  case Family::F2Odd:
    return "f2-odd";
  case Family::F2Even:
    return "f2-even";
  case Family::F2Useful:
    return "f2-useful";
  case Family::F3:
    return "f3";
  case Family::FnGeneral:
    return "fn";
  }
  return "?";
}

auto parse_family(std::string_view name) -> Family {
  for (auto f : {Family::F2Odd, Family::F2Even, Family::F2Useful, Family::F3, Family::FnGeneral})
    if (family_name(f) == name)
      return f;
  throw ParamError("unknown family '" + std::string(name) + "'");
}

auto fan_target(const ConstructionSpec &spec) -> unsigned {
  switch (spec.family) {
  case Family::F3:
    return 3;
  case Family::FnGeneral:
    return spec.n;
  default:
    return 2;
  }
}

auto expected_order(const ConstructionSpec &spec) -> std::uint64_t {
  const auto k = spec.k;
  std::uint64_t order = 0;
  switch (spec.family) {
  case Family::F2Odd:
    check_k(k >= 1 && k % 2 == 1, "f2-odd needs odd k >= 1");
    order = checked_mul(4, pow5((k - 1) / 2));
    break;
  case Family::F2Useful:
    check_k(k >= 1, "f2-useful needs i >= 1");
    order = checked_mul(2, pow5(k));
    break;
  case Family::F2Even:
    check_k(k >= 2 && k % 2 == 0, "f2-even needs even k >= 2");
    if (k == 2)
      order = 8;
    else
      order = (checked_mul(83, pow5((k - 4) / 2)) - 1) / 2;
    break;
  case Family::F3:
    check_k(k >= 1, "f3 needs k >= 1");
    if (k == 1)
      order = 6;
    else if (k % 2 == 0)
      order = checked_mul(14, pow5((k - 2) / 2)) - 2;
    else
      order = checked_mul(33, pow5((k - 3) / 2)) - 1;
    break;
  case Family::FnGeneral:
    check_k(spec.n >= 1, "fn needs n >= 1");
    check_k(k >= 1, "fn needs k >= 1");
    if (k == 1)
      order = 2ull * spec.n;
    else if (k % 2 == 0)
      order = checked_mul(4ull * spec.n, pow5((k - 2) / 2));
    else
      order = checked_mul(2ull * spec.n, pow5((k - 1) / 2));
    break;
  }
  if (order > max_order)
    throw ParamError("order " + std::to_string(order) + " exceeds " + std::to_string(max_order));
  return order;
}

auto palette_of(const ConstructionSpec &spec) -> unsigned {
  return spec.family == Family::F2Useful ? 2 * spec.k + 1 : spec.k;
}

auto Blueprint::leaf(std::string tag, ColoredCompleteGraph g) -> Blueprint {
  return Blueprint{std::move(tag), std::move(g), {}};
}

auto Blueprint::node(std::string tag, ColoredCompleteGraph reduced, std::vector<Blueprint> kids)
    -> Blueprint {
  if (kids.empty() || kids.size() != reduced.order())
    throw ParamError("blueprint node needs one child per reduced vertex");
  return Blueprint{std::move(tag), std::move(reduced), std::move(kids)};
}

auto Blueprint::order() const -> std::uint64_t {
  if (is_leaf())
    return graph.order();
  std::uint64_t n = 0;
  for (const auto &c : children)
    n += c.order();
  return n;
}

auto Blueprint::materialize(unsigned k) const -> ColoredCompleteGraph {
  auto n = order();
  if (n > max_order)
    throw ParamError("blueprint order exceeds " + std::to_string(max_order));
  if (max_color(*this) > k)
    throw PaletteError("blueprint uses color " + std::to_string(max_color(*this)) +
                       " above palette " + std::to_string(k));
  ColoredCompleteGraph out(static_cast<Vertex>(n), k, 1);
  flatten_into(*this, out, 0);
  return out;
}

auto Blueprint::find(std::string_view t) const -> std::vector<Path> {
  std::vector<Path> out;
  Path cur;
  collect(*this, t, cur, out);
  return out;
}

auto Blueprint::at(const Path &path) const -> const Blueprint & {
  const Blueprint *b = this;
  for (auto i : path) {
    if (i >= b->children.size())
      throw IndexError("blueprint path out of range");
    b = &b->children[i];
  }
  return *b;
}

auto Blueprint::replaced(const Path &path, Blueprint sub) const -> Blueprint {
  Blueprint out = *this;
  Blueprint *b = &out;
  for (auto i : path) {
    if (i >= b->children.size())
      throw IndexError("blueprint path out of range");
    b = &b->children[i];
  }
  *b = std::move(sub);
  return out;
}

auto cycle_triangle_k8(Color c5, Color tri) -> ColoredCompleteGraph {
  if (c5 == no_color || tri == no_color)
    throw PaletteError("color 0 is not a valid color");
  ColoredCompleteGraph g(8, std::max<unsigned>({1u, c5, tri}), 1);
  for (Vertex i = 0; i < 5; ++i)
    g.set_color(i, (i + 1) % 5, c5);
  g.set_color(5, 6, tri);
  g.set_color(5, 7, tri);
  g.set_color(6, 7, tri);
  return g;
}

auto blueprint_f2_odd(unsigned k) -> Blueprint {
  check_k(k >= 1 && k % 2 == 1, "f2-odd needs odd k >= 1");
  auto b = mono("G1", 4, 1);
  for (unsigned i = 1; 2 * i + 1 <= k; ++i)
    b = Blueprint::node(tag_of('G', 2 * i + 1),
                        pentagon_coloring(static_cast<Color>(2 * i), static_cast<Color>(2 * i + 1)),
                        std::vector<Blueprint>(5, b));
  return b;
}

auto blueprint_f2_useful(unsigned i) -> Blueprint {
  check_k(i >= 1, "f2-useful needs i >= 1");
  auto b = mono("K2", 2, 1);
  for (unsigned t = 1; t <= i; ++t)
    b = Blueprint::node(tag_of('G', t),
                        pentagon_coloring(static_cast<Color>(2 * t), static_cast<Color>(2 * t + 1)),
                        std::vector<Blueprint>(5, b));
  return b;
}

auto blueprint_f2_even(unsigned k, const GadgetChoices &choices) -> Blueprint {
  check_k(k >= 2 && k % 2 == 0, "f2-even needs even k >= 2");
  if (k == 2)
    return f2_even_g2();
  auto b = f2_even_g4(choices);
  for (unsigned j = 6; j <= k; j += 2)
    b = f2_even_step(b, j, choices, 0, 1);
  return b;
}

auto blueprint_f3(unsigned k, const GadgetChoices &choices) -> Blueprint {
  check_k(k >= 1, "f3 needs k >= 1");
  if (k == 1)
    return k6();
  if (k == 2)
    return f3_g2();
  if (k == 3)
    return f3_g3(choices);
  auto prev = f3_source(k, choices);
  return f3_from(prev, k, f3_rule_path(prev, k), choices);
}

auto blueprint_fn(unsigned n, unsigned k) -> Blueprint {
  check_k(n >= 1, "fn needs n >= 1");
  check_k(k >= 1, "fn needs k >= 1");
  auto b = mono("G1", static_cast<Vertex>(2 * n), 1);
  unsigned top = k % 2 == 1 ? k : k - 1;
  for (unsigned i = 1; 2 * i + 1 <= top; ++i)
    b = Blueprint::node(tag_of('G', 2 * i + 1),
                        pentagon_coloring(static_cast<Color>(2 * i), static_cast<Color>(2 * i + 1)),
                        std::vector<Blueprint>(5, b));
  if (k % 2 == 0)
    b = Blueprint::node(tag_of('G', k), ColoredCompleteGraph::uniform(2, static_cast<Color>(k),
                                                                      static_cast<Color>(k)),
                        {b, b});
  return b;
}

auto construct_f2_odd(unsigned k) -> ColoredCompleteGraph { return blueprint_f2_odd(k).materialize(k); }

auto construct_f2_useful(unsigned i) -> ColoredCompleteGraph {
  return blueprint_f2_useful(i).materialize(2 * i + 1);
}

auto construct_f2_even(unsigned k) -> ColoredCompleteGraph {
  return blueprint_f2_even(k).materialize(k);
}

auto construct_f3(unsigned k) -> ColoredCompleteGraph { return blueprint_f3(k).materialize(k); }

auto construct_fn(unsigned n, unsigned k) -> ColoredCompleteGraph {
  return blueprint_fn(n, k).materialize(k);
}

auto construct(const ConstructionSpec &spec) -> ColoredCompleteGraph {
  expected_order(spec); // parameter and size checks
  switch (spec.family) {
  case Family::F2Odd:
    return construct_f2_odd(spec.k);
  case Family::F2Even:
    return construct_f2_even(spec.k);
  case Family::F2Useful:
    return construct_f2_useful(spec.k);
  case Family::F3:
    return construct_f3(spec.k);
  case Family::FnGeneral:
    return construct_fn(spec.n, spec.k);
  }
  throw ParamError("unknown family");
}

auto is_fan_free_gallai(const ColoredCompleteGraph &g, unsigned m) -> bool {
  if (find_rainbow_triangle(g))
    return false;
  return !find_any_mono_fan(g, m);
}

auto layouts_of(Layout types) -> std::vector<Layout> {
  std::sort(types.begin(), types.end());
  std::vector<Layout> out;
  do
    out.push_back(types);
  while (std::next_permutation(types.begin(), types.end()));
  return out;
}

auto first_valid_layout(const std::vector<Layout> &candidates,
                        const std::function<ColoredCompleteGraph(const Layout &)> &build,
                        unsigned m) -> std::optional<Layout> {
  for (const auto &c : candidates)
    if (is_fan_free_gallai(build(c), m))
      return c;
  return std::nullopt;
}

auto derive_a4_layout() -> std::optional<Layout> {
  return first_valid_layout(
      layouts_of({0, 1, 2, 3, 4}),
      [](const Layout &l) {
        GadgetChoices ch;
        ch.a4 = l;
        return f2_even_g4(ch).materialize(4);
      },
      2);
}

auto derive_g4_slot() -> std::optional<unsigned> {
  for (unsigned s = 0; s < 5; ++s) {
    GadgetChoices ch;
    ch.g4_slot = s;
    if (is_fan_free_gallai(f2_even_g4(ch).materialize(4), 2))
      return s;
  }
  return std::nullopt;
}

auto derive_aj_layout() -> std::optional<Layout> {
  return first_valid_layout(
      layouts_of({0, 1, 2, 3, 4}),
      [](const Layout &l) {
        GadgetChoices ch;
        ch.aj = l;
        return blueprint_f2_even(6, ch).materialize(6);
      },
      2);
}

auto derive_f2_even_sites(unsigned k) -> std::optional<std::pair<unsigned, unsigned>> {
  check_k(k >= 6 && k % 2 == 0, "A_j sites exist for even k >= 6");
  GadgetChoices ch;
  auto prev = blueprint_f2_even(k - 2, ch);
  auto count = static_cast<unsigned>(prev.find("A4'").size()) * 5;
  for (unsigned s1 = 0; s1 < count; ++s1)
    for (unsigned s2 = s1 + 1; s2 < count; ++s2)
      if (is_fan_free_gallai(f2_even_step(prev, k, ch, s1, s2).materialize(k), 2))
        return std::pair{s1, s2};
  return std::nullopt;
}

auto derive_g3_layout() -> std::optional<Layout> {
  return first_valid_layout(
      layouts_of({0, 0, 0, 0, 1}),
      [](const Layout &l) {
        GadgetChoices ch;
        ch.g3 = l;
        return f3_g3(ch).materialize(3);
      },
      3);
}

auto derive_f3_even_layout() -> std::optional<Layout> {
  auto prev = f3_g2();
  auto site = even_rule_site(prev);
  return first_valid_layout(
      layouts_of({0, 1, 1, 2, 2}),
      [&](const Layout &l) { return f3_even_step(prev, 4, site, l).materialize(4); }, 3);
}

auto derive_f3_five_layout() -> std::optional<Layout> {
  auto g3 = blueprint_f3(3);
  auto site = odd_rule_site(g3);
  return first_valid_layout(
      layouts_of({0, 0, 0, 1, 2}),
      [&](const Layout &l) { return f3_odd_step(g3, 5, site, l).materialize(5); }, 3);
}

auto derive_f3_odd_layout() -> std::optional<Layout> {
  auto g5 = blueprint_f3(5);
  auto site = odd_rule_site(g5);
  return first_valid_layout(
      layouts_of({0, 0, 0, 1, 2}),
      [&](const Layout &l) { return f3_odd_step(g5, 7, site, l).materialize(7); }, 3);
}

auto derive_f3_site(unsigned k) -> std::optional<unsigned> {
  check_k(k >= 4, "F3 replacement steps start at k = 4");
  GadgetChoices ch;
  auto prev = f3_source(k, ch);
  auto sites = g1_sites(prev);
  for (unsigned i = 0; i < sites.size(); ++i)
    if (is_fan_free_gallai(f3_from(prev, k, sites[i], ch).materialize(k), 3))
      return i;
  return std::nullopt;
}

auto literal_f3_odd_step_exists(unsigned k) -> bool {
  check_k(k >= 7 && k % 2 == 1, "the literal odd step applies for odd k >= 7");
  auto prev = blueprint_f3(k - 2);
  auto sites = g1_sites(prev);
  for (const auto &l : layouts_of({0, 0, 0, 1, 2}))
    for (const auto &site : sites)
      if (is_fan_free_gallai(f3_odd_step(prev, k, site, l, true).materialize(k), 3))
        return true;
  return false;
}

auto f3_rule_site(unsigned k) -> unsigned {
  check_k(k >= 4, "F3 replacement steps start at k = 4");
  auto prev = f3_source(k, GadgetChoices{});
  return site_index(prev, f3_rule_path(prev, k));
}

auto bound_table(BoundFamily family, unsigned k_max, unsigned n) -> BoundTable {
  check_k(k_max >= 2 && k_max <= 20, "k_max must lie in 2..20");
  BoundTable t;
  t.family = family;
  auto exact_row = [](unsigned k, std::uint64_t v) { return BoundRow{k, v, v, v}; };

  switch (family) {
  case BoundFamily::F2:
    t.n = 2;
    for (unsigned k = 2; k <= k_max; ++k) {
      std::uint64_t v = 0;
      if (k == 2)
        v = 9;
      else if (k % 2 == 0)
        v = (83 * pow5((k - 4) / 2) + 1) / 2;
      else
        v = 4 * pow5((k - 1) / 2) + 1;
      t.rows.push_back(exact_row(k, v));
    }
    for (unsigned k = 0; k <= k_max; ++k)
      t.useful_rows.push_back(
          exact_row(k, k % 2 == 0 ? 2 * pow5(k / 2) + 1 : 4 * pow5((k - 1) / 2) + 1));
    break;
  case BoundFamily::F3:
    t.n = 3;
    for (unsigned k = 2; k <= k_max; ++k) {
      if (k % 2 == 0) {
        t.rows.push_back(exact_row(k, 14 * pow5((k - 2) / 2) - 1));
      } else if (k <= 5) {
        t.rows.push_back(exact_row(k, 33 * pow5((k - 3) / 2)));
      } else {
        auto lo = 33 * pow5((k - 3) / 2);
        auto hi = lo + 3 * (pow5((k - 5) / 2) - 1) / 4;
        t.rows.push_back(BoundRow{k, lo, hi, std::nullopt});
      }
    }
    break;
  case BoundFamily::Fn: {
    check_k(n >= 1, "fn bounds need n >= 1");
    t.n = n;
    const std::uint64_t nn = n;
    for (unsigned k = 2; k <= k_max; ++k) {
      BoundRow r{k, 0, 0, std::nullopt};
      if (k % 2 == 0) {
        auto p = pow5((k - 2) / 2);
        r.lower = checked_mul(4 * nn, p) + 1;
        // floor(10 n 5^j - 2.5 n + 1)
        r.upper = (checked_mul(20 * nn, p) - 5 * nn) / 2 + 1;
      } else {
        auto p = pow5((k - 1) / 2);
        r.lower = checked_mul(2 * nn, p) + 1;
        // floor(4.5 n 5^j - 2.5 n + 1)
        r.upper = (checked_mul(9 * nn, p) - 5 * nn) / 2 + 1;
      }
      if (r.lower == r.upper)
        r.exact = r.lower;
      t.rows.push_back(r);
    }
    BoundRow ram{2, 4 * nn + 1, 6 * nn, std::nullopt};
    if (n == 2)
      ram.exact = 9;
    else if (n == 3)
      ram.exact = 13;
    t.ramsey = ram;
    break;
  }
  }
  return t;
}

} // namespace gfl
