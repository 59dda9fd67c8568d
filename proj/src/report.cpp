#include "gfl/report.hpp"

#include <cstdio>
#include <sstream>

#include <openssl/evp.h>

#include "gfl/errors.hpp"

namespace gfl {

namespace {

auto edges_json(const EdgeList &edges) -> Json {
  auto arr = Json::array();
  for (auto e : edges)
    arr.push_back({e.u, e.v});
  return arr;
}

auto family_label(BoundFamily f) -> std::string {
  switch (f) {
  case BoundFamily::F2:
    return "f2";
  case BoundFamily::F3:
    return "f3";
  case BoundFamily::Fn:
    return "fn";
  }
  return "?";
}

} // namespace

auto sha256_digest(std::string_view bytes) -> std::string {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalInconsistency("SHA-256 digest failed");
  std::string out = "sha256:";
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

auto to_json(const RainbowTriangle &t) -> Json {
  return {{"kind", "rainbow_triangle"}, {"vertices", {t.a, t.b, t.c}}};
}

auto to_json(const MonoFan &f) -> Json {
  return {{"kind", "mono_fan"},
          {"color", f.color},
          {"center", f.center},
          {"edges", edges_json(f.matching)}};
}

auto to_json(const Certificate &c) -> Json {
  return std::visit([](const auto &x) { return to_json(x); }, c);
}

auto to_json(const GallaiPartition &p) -> Json {
  auto pairs = Json::array();
  for (const auto &pc : p.pair_colors)
    pairs.push_back({{"i", pc.i}, {"j", pc.j}, {"c", pc.c}});
  return {{"parts", p.parts}, {"between_colors", p.between_colors}, {"pair_colors", pairs}};
}

auto to_json(const BoundRow &r) -> Json {
  Json j{{"k", r.k}, {"lower", r.lower}, {"upper", r.upper}};
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  return j;
}

auto to_json(const BoundTable &t) -> Json {
  Json j{{"family", family_label(t.family)}, {"n", t.n}};
  auto rows = Json::array();
  for (const auto &r : t.rows)
    rows.push_back(to_json(r));
  j["rows"] = rows;
  if (!t.useful_rows.empty()) {
    auto useful = Json::array();
    for (const auto &r : t.useful_rows)
      useful.push_back(to_json(r));
    j["useful_rows"] = useful;
  }
  if (t.ramsey)
    j["ramsey"] = to_json(*t.ramsey);
  return j;
}

auto to_json(const VerifyReport &r) -> Json {
  Json j;
  j["rainbow"] = r.rainbow ? to_json(*r.rainbow) : Json(nullptr);
  auto fans = Json::array();
  for (const auto &f : r.fans) {
    Json e{{"color", f.color}};
    e["fan"] = f.fan ? to_json(*f.fan) : Json(nullptr);
    if (f.max_order)
      e["max_fan_order"] = *f.max_order;
    fans.push_back(e);
  }
  j["fans"] = fans;
  return j;
}

auto to_json(const SearchStats &s, bool with_timing) -> Json {
  Json j{{"nodes", s.nodes}, {"prunes", s.prunes}, {"leaves", s.leaves}, {"cases", s.cases}};
  if (with_timing)
    j["elapsed_seconds"] = s.elapsed_seconds;
  return j;
}

auto to_json(const SearchOutcome &o, bool with_timing) -> Json {
  Json j{{"verdict", verdict_name(o.verdict)}, {"stats", to_json(o.stats, with_timing)}};
  j["witness"] = o.witness ? Json(serialize_gcg(*o.witness)) : Json(nullptr);
  if (!o.note.empty())
    j["note"] = o.note;
  return j;
}

auto certificate_from_json(const Json &j) -> Certificate {
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "rainbow_triangle") {
      const auto &v = j.at("vertices");
      if (v.size() != 3)
        throw FormatError("rainbow_triangle needs 3 vertices");
      return RainbowTriangle{v[0].get<Vertex>(), v[1].get<Vertex>(), v[2].get<Vertex>()};
    }
    if (kind == "mono_fan") {
      MonoFan f;
      f.color = j.at("color").get<Color>();
      f.center = j.at("center").get<Vertex>();
      for (const auto &e : j.at("edges")) {
        if (e.size() != 2)
          throw FormatError("fan edge needs 2 vertices");
        f.matching.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
      return f;
    }
    throw FormatError("unknown certificate kind '" + kind + "'");
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(std::string("bad certificate JSON: ") + e.what());
  }
}

auto format_table_text(const BoundTable &t) -> std::string {
  std::ostringstream os;
  auto line = [&](const BoundRow &r) {
    os << "  k=" << r.k << "  ";
    if (r.exact)
      os << *r.exact << '\n';
    else
      os << r.lower << " <= gr <= " << r.upper << '\n';
  };
  os << family_label(t.family) << " (fan order " << t.n << ")\n";
  for (const auto &r : t.rows)
    line(r);
  if (!t.useful_rows.empty()) {
    os << "gr' with k' useful colors\n";
    for (const auto &r : t.useful_rows)
      line(r);
  }
  if (t.ramsey) {
    os << "R(F" << t.n << ",F" << t.n << "): ";
    if (t.ramsey->exact)
      os << *t.ramsey->exact << '\n';
    else
      os << t.ramsey->lower << " <= R <= " << t.ramsey->upper << '\n';
  }
  return os.str();
}

} // namespace gfl
