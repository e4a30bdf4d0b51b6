#include "bicomb/io.hpp"

#include <fstream>
#include <sstream>

#include "bicomb/errors.hpp"

namespace bicomb {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("bad value for ") + what + ": " + j.dump());
  }
}

// Invalid values inside a document are input errors.
template <class F>
auto rethrow_as_parse(F&& f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return exact_rational(j.get<double>());
  throw ParseError("expected a rational, got " + j.dump());
}

Space space_from_json(const json& j) {
  std::string kind = get_as<std::string>(field(j, "kind"), "kind");
  auto build = [&] {
    if (kind == "euclidean") return Space::euclidean(get_as<int>(field(j, "dim"), "dim"));
    if (kind == "star-seq") {
      if (!j.contains("window")) return Space::star_seq();
      auto w = get_as<std::vector<std::int64_t>>(j.at("window"), "window");
      if (w.size() != 2) throw ParseError("window must be [lo, hi]");
      return Space::star_seq(w[0], w[1]);
    }
    if (kind == "tree") {
      std::vector<double> lengths;
      if (j.contains("lengths")) lengths = get_as<std::vector<double>>(j.at("lengths"), "lengths");
      if (j.contains("legs")) {
        int k = get_as<int>(j.at("legs"), "legs");
        if (lengths.empty()) lengths.assign(k, 1.0);
        if (static_cast<int>(lengths.size()) != k) throw ParseError("legs and lengths disagree");
      }
      return Space::tree(std::move(lengths));
    }
    throw ParseError("unknown space kind '" + kind + "'");
  };
  Space space = rethrow_as_parse(build);
  if (j.contains("isometries")) {
    for (const auto& [name, iso] : j.at("isometries").items())
      space.register_isometry(name, isometry_from_json(space, iso));
  }
  return space;
}

json space_to_json(const Space& space) {
  switch (space.kind()) {
    case SpaceKind::euclidean: return {{"kind", "euclidean"}, {"dim", space.dim()}};
    case SpaceKind::star_seq:
      return {{"kind", "star-seq"}, {"window", {space.window_lo(), space.window_hi()}}};
    case SpaceKind::tree: return {{"kind", "tree"}, {"legs", space.legs()}, {"lengths", space.leg_lengths()}};
  }
  return nullptr;
}

Point point_from_json(const Space& space, const json& j) {
  auto read = [&]() -> Point {
    switch (space.kind()) {
      case SpaceKind::euclidean: {
        const json& c = j.is_object() ? field(j, "coords") : j;
        return EuclidPoint{get_as<std::vector<double>>(c, "coords")};
      }
      case SpaceKind::star_seq: {
        const json& e = j.is_object() ? field(j, "entries") : j;
        if (!e.is_array()) throw ParseError("entries must be an array");
        std::vector<SparseSeq::Entry> entries;
        for (const auto& item : e) {
          if (!item.is_array() || item.size() != 2) throw ParseError("entry must be [index, value]");
          entries.emplace_back(get_as<std::int64_t>(item[0], "index"), rational_from_json(item[1]));
        }
        return SparseSeq::from_entries(std::move(entries));
      }
      case SpaceKind::tree:
        return TreePoint{get_as<int>(field(j, "leg"), "leg"), get_as<double>(field(j, "r"), "r")};
    }
    throw ParseError("unreachable");
  };
  try {
    return space.canonical(read());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid point: ") + e.what());
  }
}

json point_to_json(const Point& p) {
  if (auto e = std::get_if<EuclidPoint>(&p)) return {{"coords", e->coords}};
  if (auto q = std::get_if<SparseSeq>(&p)) {
    json entries = json::array();
    for (const auto& [i, v] : q->entries()) entries.push_back({i, to_string(v)});
    return {{"entries", entries}};
  }
  const auto& t = std::get<TreePoint>(p);
  return {{"leg", t.leg}, {"r", t.r}};
}

Isometry isometry_from_json(const Space& space, const json& j) {
  if (j.is_string()) return rethrow_as_parse([&] { return space.isometry(j.get<std::string>()); });
  std::string kind = get_as<std::string>(field(j, "kind"), "kind");
  Isometry iso;
  if (kind == "identity") {
    iso = Isometry::identity();
  } else if (kind == "shift") {
    iso = Isometry::shift(j.contains("power") ? get_as<std::int64_t>(j.at("power"), "power") : 1);
  } else if (kind == "rotation") {
    if (j.contains("turns")) iso = Isometry::rotation_turns(rational_from_json(j.at("turns")));
    else iso = Isometry::rotation_angle(get_as<double>(field(j, "angle"), "angle"));
  } else if (kind == "translation") {
    iso = Isometry::translation(get_as<std::vector<double>>(field(j, "vector"), "vector"));
  } else if (kind == "leg-permutation") {
    iso = Isometry::leg_permutation(get_as<std::vector<int>>(field(j, "perm"), "perm"));
  } else if (kind == "composition") {
    std::vector<Isometry> parts;
    for (const auto& p : field(j, "parts")) parts.push_back(isometry_from_json(space, p));
    iso = Isometry::compose(std::move(parts));
  } else {
    throw ParseError("unknown isometry kind '" + kind + "'");
  }
  try {
    validate_isometry(space, iso);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid isometry: ") + e.what());
  }
  return iso;
}

json isometry_to_json(const Isometry& iso) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IdentityIso>) {
          return {{"kind", "identity"}};
        } else if constexpr (std::is_same_v<T, ShiftIso>) {
          return {{"kind", "shift"}, {"power", v.power}};
        } else if constexpr (std::is_same_v<T, RotationIso>) {
          if (v.turns) return {{"kind", "rotation"}, {"turns", to_string(*v.turns)}};
          return {{"kind", "rotation"}, {"angle", v.angle}};
        } else if constexpr (std::is_same_v<T, TranslationIso>) {
          return {{"kind", "translation"}, {"vector", v.vector}};
        } else if constexpr (std::is_same_v<T, LegPermutationIso>) {
          return {{"kind", "leg-permutation"}, {"perm", v.perm}};
        } else {
          json parts = json::array();
          for (const auto& p : v.parts) parts.push_back(isometry_to_json(p));
          return {{"kind", "composition"}, {"parts", parts}};
        }
      },
      iso.variant());
}

AtomicMeasure measure_from_json(const json& j) { return measure_from_json(space_from_json(field(j, "space")), j); }

AtomicMeasure measure_from_json(const Space& space, const json& j) {
  const json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw ParseError("atoms must be an array");
  std::vector<AtomicMeasure::Atom> out;
  for (const auto& a : atoms) out.push_back({point_from_json(space, field(a, "point")), rational_from_json(field(a, "mass"))});
  try {
    return AtomicMeasure(space, std::move(out));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid measure: ") + e.what());
  }
}

json measure_to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"point", point_to_json(a.point)}, {"mass", to_string(a.mass)}});
  return {{"space", space_to_json(mu.space())}, {"atoms", atoms}};
}

TargetSet target_from_json(const Space& space, const json& j) {
  std::string kind = get_as<std::string>(field(j, "kind"), "kind");
  if (kind == "ball") {
    double radius = get_as<double>(field(j, "radius"), "radius");
    if (!(radius >= 0.0)) throw ParseError("radius must be non-negative");
    return TargetSet::ball(point_from_json(space, field(j, "center")), radius);
  }
  if (kind == "points") {
    std::vector<Point> pts;
    for (const auto& p : field(j, "points")) pts.push_back(point_from_json(space, p));
    if (pts.empty()) throw ParseError("target point set is empty");
    double tol = j.contains("tol") ? get_as<double>(j.at("tol"), "tol") : 1e-9;
    return TargetSet::points(std::move(pts), tol);
  }
  throw ParseError("unknown target kind '" + kind + "'");
}

json target_to_json(const TargetSet& target) {
  if (target.is_ball())
    return {{"kind", "ball"}, {"center", point_to_json(target.center())}, {"radius", target.radius()}};
  json pts = json::array();
  for (const auto& p : target.members()) pts.push_back(point_to_json(p));
  return {{"kind", "points"}, {"points", pts}, {"tol", target.radius()}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace bicomb
