#include "riccisol/specfile.hpp"

#include <fstream>
#include <json.hpp>

namespace riccisol {

namespace {

using nlohmann::json;

Rational rat(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
  } catch (const parse_error& e) {
    throw specfile_error(where + ": " + e.what());
  }
  throw specfile_error(where + ": expected an exact rational literal (\"p/q\" string or integer)");
}

json rat_json(const Rational& q) { return to_string(q); }

} // namespace

PairSpec parse_pair_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw specfile_error(std::string("malformed JSON: ") + e.what());
  }
  PairSpec spec;
  try {
    spec.id = j.value("id", "");
    spec.name = j.value("name", spec.id);
    if (!j.contains("dims")) throw specfile_error("missing dims");
    spec.r = j["dims"].value("r", 0u);
    spec.n = j["dims"].at("n").get<size_t>();
    const size_t N = spec.r + spec.n;
    for (const auto& b : j.value("brackets", json::array())) {
      PairSpec::BracketEntry e;
      e.i = b.at("i").get<size_t>();
      e.j = b.at("j").get<size_t>();
      e.components = qvec_zero(N);
      const auto& comps = b.at("components");
      if (comps.is_array()) {
        if (comps.size() != N) throw specfile_error("bracket components must have r+n entries");
        for (size_t k = 0; k < N; ++k) e.components[k] = rat(comps[k], "bracket component");
      } else {
        for (auto it = comps.begin(); it != comps.end(); ++it) {
          const size_t k = static_cast<size_t>(std::stoul(it.key()));
          if (k < 1 || k > N) throw specfile_error("bracket component index out of range");
          e.components[k - 1] = rat(it.value(), "bracket component");
        }
      }
      spec.brackets.push_back(std::move(e));
    }
    for (const auto& m : j.value("metric", json::array()))
      spec.metric_entries.emplace_back(m.at("i").get<size_t>(), m.at("j").get<size_t>(),
                                       rat(m.at("value"), "metric entry"));
    if (j.contains("params"))
      for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
        spec.params[it.key()] = rat(it.value(), "param " + it.key());
  } catch (const json::exception& e) {
    throw specfile_error(std::string("bad spec structure: ") + e.what());
  }
  return spec;
}

PairSpec load_pair_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw specfile_error("cannot open spec file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_pair_spec(text);
}

std::string pair_spec_to_json(const PairSpec& spec) {
  json j;
  j["id"] = spec.id;
  j["name"] = spec.name;
  j["dims"] = {{"r", spec.r}, {"n", spec.n}};
  json brackets = json::array();
  for (const auto& e : spec.brackets) {
    json comps = json::array();
    for (const auto& c : e.components) comps.push_back(rat_json(c));
    brackets.push_back({{"i", e.i}, {"j", e.j}, {"components", comps}});
  }
  j["brackets"] = brackets;
  json metric = json::array();
  for (const auto& [i, k, v] : spec.metric_entries)
    metric.push_back({{"i", i}, {"j", k}, {"value", rat_json(v)}});
  j["metric"] = metric;
  json params = json::object();
  for (const auto& [k, v] : spec.params) params[k] = rat_json(v);
  j["params"] = params;
  return j.dump(2);
}

std::string pair_to_json(const HomogeneousPair& pair) {
  PairSpec spec;
  spec.id = pair.id;
  spec.name = pair.name;
  spec.r = pair.r;
  spec.n = pair.n;
  spec.params = pair.params;
  const size_t N = pair.dim_g();
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j) {
      if (qvec_is_zero(pair.bracket[i][j])) continue;
      PairSpec::BracketEntry e;
      e.i = i + 1;
      e.j = j + 1;
      e.components = pair.bracket[i][j];
      spec.brackets.push_back(std::move(e));
    }
  for (size_t i = 0; i < pair.n; ++i)
    for (size_t j = i; j < pair.n; ++j)
      if (pair.metric(i, j) != 0) spec.metric_entries.emplace_back(i + 1, j + 1, pair.metric(i, j));
  return pair_spec_to_json(spec);
}

std::string system_to_json(const SolitonSystem& sys) {
  json j;
  j["n"] = sys.n;
  j["provenance"] = sys.provenance == Provenance::Assembled ? "assembled" : "fixture";
  auto unknown_name = [&](size_t k) { return k == sys.n ? std::string("sigma") : "x" + std::to_string(k + 1); };
  json rows = json::array();
  for (size_t r = 0; r < sys.rows(); ++r) {
    json row = json::object();
    for (size_t k = 0; k <= sys.n; ++k)
      if (sys.coeffs(r, k) != 0) row[unknown_name(k)] = rat_json(sys.coeffs(r, k));
    if (sys.constants[r] != 0) row["constant"] = rat_json(sys.constants[r]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  if (!sys.quadratic_checks.empty()) {
    json qs = json::array();
    for (const auto& q : sys.quadratic_checks) {
      json e = json::object();
      e["product"] = {{"coeff", rat_json(q.coeff)}, {"a", unknown_name(q.a)}, {"b", unknown_name(q.b)}};
      json lin = json::object();
      for (size_t k = 0; k <= sys.n; ++k)
        if (q.linear[k] != 0) lin[unknown_name(k)] = rat_json(q.linear[k]);
      e["linear"] = lin;
      if (q.constant != 0) e["constant"] = rat_json(q.constant);
      qs.push_back(e);
    }
    j["quadratic_checks"] = qs;
  }
  return j.dump(2);
}

SolitonSystem parse_system_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw specfile_error(std::string("malformed JSON: ") + e.what());
  }
  SolitonSystem sys;
  try {
    sys.n = j.at("n").get<size_t>();
    sys.provenance = j.value("provenance", "fixture") == std::string("assembled") ? Provenance::Assembled
                                                                                  : Provenance::Fixture;
    auto unknown_index = [&](const std::string& name) -> size_t {
      if (name == "sigma") return sys.n;
      if (name.size() >= 2 && name[0] == 'x') {
        const size_t k = std::stoul(name.substr(1));
        if (k >= 1 && k <= sys.n) return k - 1;
      }
      throw specfile_error("unknown unknown name: " + name);
    };
    const auto& rows = j.at("rows");
    sys.coeffs = QMatrix(rows.size(), sys.n + 1);
    sys.constants = qvec_zero(rows.size());
    size_t r = 0;
    for (const auto& row : rows) {
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (it.key() == "constant") sys.constants[r] = rat(it.value(), "row constant");
        else sys.coeffs(r, unknown_index(it.key())) = rat(it.value(), "row coefficient");
      }
      ++r;
    }
    for (const auto& e : j.value("quadratic_checks", json::array())) {
      SolitonSystem::QuadraticCheck q;
      q.coeff = rat(e.at("product").at("coeff"), "product coeff");
      q.a = unknown_index(e.at("product").at("a").get<std::string>());
      q.b = unknown_index(e.at("product").at("b").get<std::string>());
      q.linear = qvec_zero(sys.n + 1);
      if (e.contains("linear"))
        for (auto it = e["linear"].begin(); it != e["linear"].end(); ++it)
          q.linear[unknown_index(it.key())] = rat(it.value(), "quadratic linear part");
      q.constant = e.contains("constant") ? rat(e["constant"], "quadratic constant") : Rational(0);
      sys.quadratic_checks.push_back(std::move(q));
    }
  } catch (const json::exception& e) {
    throw specfile_error(std::string("bad system structure: ") + e.what());
  }
  return sys;
}

} // namespace riccisol
