#include <fstream>
#include <sstream>

#include "semihall/backends.hpp"
#include "semihall/errors.hpp"

namespace semihall {

namespace {

QuiverShape make_shape(int vertices, std::vector<Arrow> arrows) {
  if (vertices <= 0) throw ConfigError("quiver needs at least one vertex");
  for (const auto& a : arrows) {
    if (a.source < 0 || a.source >= vertices || a.target < 0 || a.target >= vertices) {
      throw ConfigError("arrow endpoint out of range");
    }
  }
  QuiverShape s;
  s.vertices = vertices;
  s.arrows = std::move(arrows);
  if (!s.acyclic()) throw ConfigError("quiver is not acyclic");
  return s;
}

}  // namespace

QuiverBackend::QuiverBackend(int vertices, std::vector<Arrow> arrows, std::uint64_t q,
                             std::uint64_t budget)
    : q_(q), engine_(make_shape(vertices, std::move(arrows)), static_cast<Residue>(q), budget) {}

std::string QuiverBackend::descriptor() const {
  std::ostringstream os;
  os << "quiver(vertices=" << shape().vertices << ",arrows=[";
  for (std::size_t i = 0; i < shape().arrows.size(); ++i) {
    if (i) os << ",";
    os << shape().arrows[i].source << "->" << shape().arrows[i].target;
  }
  os << "],q=" << q_ << ")";
  return os.str();
}

std::vector<ClassId> QuiverBackend::objects_of_class(const K0Class& c) const {
  if (!c.nonnegative()) return {};
  return engine_.classes_with_dims(c.v);
}

ClassId QuiverBackend::zero() const {
  return engine_.classes_with_dims(std::vector<int>(static_cast<std::size_t>(shape().vertices), 0)).front();
}

std::string QuiverBackend::label(ClassId m) const {
  return K0Class(engine_.dims(m)).to_string() + "#" + std::to_string(engine_.local_index(m));
}

std::unique_ptr<QuiverBackend> quiver_from_json(const nlohmann::json& j, std::uint64_t q_override) {
  try {
    const int n = j.at("vertices").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw ConfigError("each arrow must be a [source, target] pair");
      arrows.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    std::uint64_t q = q_override;
    if (q == 0) q = j.at("q").get<std::uint64_t>();
    return std::make_unique<QuiverBackend>(n, std::move(arrows), q);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed quiver description: ") + e.what());
  }
}

std::unique_ptr<QuiverBackend> load_quiver_file(const std::string& path, std::uint64_t q_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open quiver file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("quiver file is not valid JSON: " + std::string(e.what()));
  }
  return quiver_from_json(j, q_override);
}

std::unique_ptr<QuiverBackend> make_a2(std::uint64_t q) {
  return std::make_unique<QuiverBackend>(2, std::vector<Arrow>{{0, 1}}, q);
}

}  // namespace semihall
