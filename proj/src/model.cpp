#include "gkml/model.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gkml {

namespace {

const TruthValue kZero = TruthValue::zero();

}  // namespace

GKModel::GKModel(std::vector<std::string> worlds,
                 std::map<std::pair<std::string, std::string>, TruthValue> s,
                 std::map<std::string, std::map<std::string, TruthValue>> e,
                 std::optional<std::set<TruthValue>> constants)
    : worlds_(std::move(worlds)), s_(std::move(s)), e_(std::move(e)), constants_(std::move(constants)) {
  if (worlds_.empty()) throw Error("model must have at least one world");
  for (size_t i = 0; i < worlds_.size(); ++i) {
    const std::string& w = worlds_[i];
    if (w.empty()) throw Error("world names must be nonempty");
    if (w.find(',') != std::string::npos)
      throw Error("world name '" + w + "' may not contain ','");
    if (!world_index_.emplace(w, (int)i).second) throw Error("duplicate world '" + w + "'");
  }
  for (const auto& [key, v] : s_) {
    if (!has_world(key.first) || !has_world(key.second))
      throw Error("S entry references unknown world '" +
                  (has_world(key.first) ? key.second : key.first) + "'");
    (void)v;
  }
  for (const auto& [w, row] : e_) {
    if (!has_world(w)) throw Error("e entry references unknown world '" + w + "'");
    for (const auto& [atom, v] : row) {
      if (atom.empty()) throw Error("atom names must be nonempty");
      (void)v;
    }
  }
  if (constants_) {
    constants_->insert(TruthValue::zero());
    constants_->insert(TruthValue::one());
  }
}

int GKModel::world_index(const std::string& w) const {
  auto it = world_index_.find(w);
  if (it == world_index_.end()) throw Error("unknown world '" + w + "'");
  return it->second;
}

const TruthValue& GKModel::access(const std::string& x, const std::string& y) const {
  auto it = s_.find({x, y});
  return it == s_.end() ? kZero : it->second;
}

const TruthValue& GKModel::atom_value(const std::string& x, const std::string& atom) const {
  auto row = e_.find(x);
  if (row == e_.end()) return kZero;
  auto it = row->second.find(atom);
  return it == row->second.end() ? kZero : it->second;
}

std::vector<std::string> GKModel::atoms() const {
  std::set<std::string> names;
  for (const auto& [w, row] : e_)
    for (const auto& [atom, v] : row) {
      (void)v;
      names.insert(atom);
    }
  return {names.begin(), names.end()};
}

std::vector<TruthValue> GKModel::all_values() const {
  std::vector<TruthValue> out;
  for (const auto& [key, v] : s_) {
    (void)key;
    out.push_back(v);
  }
  for (const auto& [w, row] : e_) {
    (void)w;
    for (const auto& [atom, v] : row) {
      (void)atom;
      out.push_back(v);
    }
  }
  return out;
}

FrameReport frame_properties(const GKModel& m) {
  FrameReport r;
  const auto& ws = m.worlds();
  for (const auto& x : ws) {
    for (const auto& y : ws) {
      const TruthValue& sxy = m.access(x, y);
      if (r.crisp && !sxy.is_zero() && !sxy.is_one()) {
        r.crisp = false;
        r.crisp_witness = "S(" + x + "," + y + ") = " + sxy.str();
      }
      if (r.symmetric) {
        const TruthValue& syx = m.access(y, x);
        if (sxy != syx) {
          r.symmetric = false;
          r.symmetric_witness = "S(" + x + "," + y + ") = " + sxy.str() + " but S(" + y + "," + x +
                                ") = " + syx.str();
        }
      }
    }
    if (r.reflexive && !m.access(x, x).is_one()) {
      r.reflexive = false;
      r.reflexive_witness = "S(" + x + "," + x + ") = " + m.access(x, x).str();
    }
  }
  for (const auto& x : ws) {
    if (!r.transitive) break;
    for (const auto& y : ws) {
      if (!r.transitive) break;
      for (const auto& z : ws) {
        TruthValue lhs = tnorm(m.access(x, y), m.access(y, z));
        if (lhs > m.access(x, z)) {
          r.transitive = false;
          r.transitive_witness = "S(" + x + "," + y + ").S(" + y + "," + z + ") = " + lhs.str() +
                                 " > S(" + x + "," + z + ") = " + m.access(x, z).str();
          break;
        }
      }
    }
  }
  return r;
}

namespace {

using json = nlohmann::ordered_json;

TruthValue parse_value(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(where + ": rational values must be strings");
  try {
    return TruthValue::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  }
}

}  // namespace

GKModel model_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
  if (!doc.is_object()) throw Error("malformed model file: top level must be an object");
  if (!doc.contains("worlds") || !doc["worlds"].is_array())
    throw Error("malformed model file: missing \"worlds\" array");

  std::vector<std::string> worlds;
  for (const auto& w : doc["worlds"]) {
    if (!w.is_string()) throw Error("malformed model file: world names must be strings");
    worlds.push_back(w.get<std::string>());
  }

  std::map<std::pair<std::string, std::string>, TruthValue> s;
  if (doc.contains("S")) {
    if (!doc["S"].is_object()) throw Error("malformed model file: \"S\" must be an object");
    for (const auto& [key, v] : doc["S"].items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw Error("malformed model file: S key '" + key + "' is not \"w1,w2\"");
      TruthValue tv = parse_value(v, "S entry '" + key + "'");
      if (!tv.is_zero()) s.emplace(std::pair{key.substr(0, comma), key.substr(comma + 1)}, tv);
    }
  }

  std::map<std::string, std::map<std::string, TruthValue>> e;
  if (doc.contains("e")) {
    if (!doc["e"].is_object()) throw Error("malformed model file: \"e\" must be an object");
    for (const auto& [w, row] : doc["e"].items()) {
      if (!row.is_object())
        throw Error("malformed model file: e entry for world '" + w + "' must be an object");
      for (const auto& [atom, v] : row.items()) {
        TruthValue tv = parse_value(v, "e entry '" + w + "." + atom + "'");
        if (!tv.is_zero()) e[w][atom] = tv;
      }
    }
  }

  std::optional<std::set<TruthValue>> constants;
  if (doc.contains("constants")) {
    if (!doc["constants"].is_array())
      throw Error("malformed model file: \"constants\" must be an array");
    constants.emplace();
    for (const auto& v : doc["constants"]) constants->insert(parse_value(v, "constants"));
  }

  return GKModel(std::move(worlds), std::move(s), std::move(e), std::move(constants));
}

GKModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json_text(buf.str());
}

std::string model_to_json_text(const GKModel& m) {
  json doc = json::object();
  doc["worlds"] = m.worlds();
  json s = json::object();
  for (const auto& [key, v] : m.access_map())
    if (!v.is_zero()) s[key.first + "," + key.second] = v.str();
  doc["S"] = s;
  json e = json::object();
  for (const auto& [w, row] : m.valuation_map()) {
    json jrow = json::object();
    for (const auto& [atom, v] : row)
      if (!v.is_zero()) jrow[atom] = v.str();
    if (!jrow.empty()) e[w] = jrow;
  }
  doc["e"] = e;
  if (m.constants()) {
    json q = json::array();
    for (const auto& v : *m.constants()) q.push_back(v.str());
    doc["constants"] = q;
  }
  return doc.dump(2) + "\n";
}

void save_model(const GKModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file '" + path + "'");
  out << model_to_json_text(m);
}

GKModel transform_model(const GKModel& m, const OrderMap& g) {
  auto mapped = [&](const TruthValue& v) {
    if (!g.contains(v))
      throw Error("order map does not cover model value " + v.str());
    return g.apply(v);
  };
  std::map<std::pair<std::string, std::string>, TruthValue> s;
  for (const auto& [key, v] : m.access_map()) {
    TruthValue t = mapped(v);
    if (!t.is_zero()) s.emplace(key, t);
  }
  std::map<std::string, std::map<std::string, TruthValue>> e;
  for (const auto& [w, row] : m.valuation_map())
    for (const auto& [atom, v] : row) {
      TruthValue t = mapped(v);
      if (!t.is_zero()) e[w][atom] = t;
    }
  return GKModel(m.worlds(), std::move(s), std::move(e), m.constants());
}

GKModel builtin_model(const std::string& name, int n) {
  if (name == "sec6-crisp-fail") {
    std::map<std::pair<std::string, std::string>, TruthValue> s;
    s.emplace(std::pair<std::string, std::string>{"x", "y"}, TruthValue::ratio(1, 2));
    std::map<std::string, std::map<std::string, TruthValue>> e;
    e["x"]["p"] = TruthValue::one();
    e["y"]["p"] = TruthValue::one();
    return GKModel({"x", "y"}, std::move(s), std::move(e));
  }
  if (n < 1) throw Error("builtin model '" + name + "' requires n >= 1");
  if (name == "sec5-truncated") {
    std::vector<std::string> worlds;
    std::map<std::pair<std::string, std::string>, TruthValue> s;
    std::map<std::string, std::map<std::string, TruthValue>> e;
    for (int k = 0; k < n; ++k) worlds.push_back(std::to_string(k));
    for (const auto& x : worlds)
      for (const auto& y : worlds) s.emplace(std::pair{x, y}, TruthValue::one());
    for (int k = 0; k < n; ++k) e[worlds[k]]["p"] = TruthValue::ratio(1, k + 1);
    return GKModel(std::move(worlds), std::move(s), std::move(e));
  }
  if (name == "sec3-slice") {
    std::map<std::string, std::map<std::string, TruthValue>> e;
    e["w"]["q"] = TruthValue::ratio(1, 2);
    for (int i = 1; i <= n; ++i)
      e["w"]["p" + std::to_string(i)] = TruthValue::ratio(i, 2 * (i + 1));
    return GKModel({"w"}, {}, std::move(e));
  }
  throw Error("unknown builtin model '" + name + "'");
}

}  // namespace gkml
