#include "symlab/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "symlab/cli/svg.hpp"
#include "symlab/sets/set_literal.hpp"

namespace symlab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

AnySet load_set_value(const std::string& value) {
  std::string v = trim(value);
  if (v.rfind("rep=", 0) == 0) return parse_set_literal(v);
  std::ifstream in(v);
  if (!in) throw std::invalid_argument("cannot open set file: " + v);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set_literal(buf.str());
}

OperatorKind parse_operator(const std::string& s) {
  if (s == "minkowski" || s == "central") return OperatorKind::minkowski;
  if (s == "fiber") return OperatorKind::fiber;
  if (s == "steiner") return OperatorKind::steiner;
  if (s == "isometry_mean") return OperatorKind::isometry_mean;
  throw std::invalid_argument("unknown operator: " + s);
}

void parse_schedule_value(const std::string& s, ScheduleSpec& spec) {
  std::string v = trim(s);
  if (v == "cyclic") {
    spec.kind = ScheduleKind::cyclic;
    return;
  }
  if (v.rfind("random", 0) == 0) {
    spec.kind = ScheduleKind::random_seeded;
    auto pos = v.find("seed=");
    if (pos == std::string::npos)
      throw std::invalid_argument("random schedule needs seed=<u64>");
    spec.seed = std::stoull(v.substr(pos + 5));
    return;
  }
  if (v.rfind("explicit", 0) == 0) {
    spec.kind = ScheduleKind::explicit_list;
    for (const auto& tok : split_list(v.substr(8)))
      spec.explicit_indices.push_back(std::stoi(tok));
    return;
  }
  throw std::invalid_argument("unknown schedule: " + v);
}

}  // namespace

Subspace parse_subspace(const std::string& token, int ambient_dim) {
  std::string t = trim(token);
  if (t == "origin" || t == "o") return Subspace::origin(ambient_dim);
  if (t.rfind("axis:", 0) == 0) {
    std::string ax = t.substr(5);
    std::vector<int> axes;
    for (char c : ax) {
      if (c == 'x') axes.push_back(0);
      else if (c == 'y') axes.push_back(1);
      else if (c == 'z') axes.push_back(2);
      else throw std::invalid_argument("unknown axis name in " + token);
    }
    return Subspace::coordinate(ambient_dim, axes);
  }
  if (t.rfind("plane:", 0) == 0) return parse_subspace("axis:" + t.substr(6), ambient_dim);
  if (t.rfind("angle:", 0) == 0) {
    if (ambient_dim != 2)
      throw std::invalid_argument("angle subspaces are lines in the plane");
    double degrees = std::stod(t.substr(6));
    return Subspace::line_2d(degrees * M_PI / 180.0);
  }
  throw std::invalid_argument("unknown subspace token: " + token);
}

namespace {

ExperimentConfig from_key_values(const std::map<std::string, std::string>& kv) {
  ExperimentConfig cfg;
  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument(std::string("missing field: ") + key);
    return it->second;
  };
  auto maybe = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };

  cfg.input = load_set_value(need("input"));
  int n = dim_of(cfg.input);
  cfg.spec.op = parse_operator(trim(need("operator")));
  bool central = trim(need("operator")) == "central";

  if (auto fam = maybe("family")) {
    for (const auto& tok : split_list(*fam)) cfg.spec.family.push_back(parse_subspace(tok, n));
  }
  if (central && cfg.spec.family.empty()) cfg.spec.family.push_back(Subspace::origin(n));
  if (auto sched = maybe("schedule")) parse_schedule_value(*sched, cfg.spec);
  if (auto v = maybe("max_steps")) cfg.spec.max_steps = std::stoi(*v);
  if (auto v = maybe("tol")) cfg.spec.tol = std::stod(*v);
  if (auto v = maybe("snap")) cfg.snap_override = std::stod(*v);
  if (auto v = maybe("sample_resolution")) cfg.spec.sample_resolution = std::stod(*v);
  if (auto v = maybe("grid_step_cap")) cfg.spec.grid_step_cap = std::stoi(*v);
  if (auto v = maybe("reference")) cfg.reference = load_set_value(*v);
  if (auto v = maybe("csv")) cfg.csv_path = trim(*v);
  if (auto v = maybe("svg")) cfg.svg_pattern = trim(*v);
  return cfg;
}

ExperimentConfig from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::map<std::string, std::string> kv;
  for (auto& [key, value] : j.items()) {
    if (key == "family" && value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ",";
        joined += item.get<std::string>();
      }
      kv["family"] = joined;
    } else if (value.is_string()) {
      kv[key] = value.get<std::string>();
    } else {
      kv[key] = value.dump();
    }
  }
  return from_key_values(kv);
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return from_json(t);
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    auto eq = l.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line is not key = value: " + l);
    kv[trim(l.substr(0, eq))] = trim(l.substr(eq + 1));
  }
  return from_key_values(kv);
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

int run_experiment(const ExperimentConfig& config, std::ostream& log) {
  ExperimentConfig cfg = config;
  if (cfg.snap_override) {
    if (auto* p = std::get_if<FinitePointSet>(&cfg.input))
      cfg.input = p->with_snap(*cfg.snap_override);
  }

  std::vector<std::pair<int, AnySet>> snapshots;
  StepCallback capture = nullptr;
  if (!cfg.svg_pattern.empty()) {
    capture = [&](int step, const AnySet& x) { snapshots.emplace_back(step, x); };
  }

  const AnySet* ref = cfg.reference ? &*cfg.reference : nullptr;
  RunResult run = run_schedule(cfg.input, cfg.spec, ref, capture);

  log << "steps: " << run.report.steps.size() << "\n";
  log << "stop: " << to_string(run.report.stop_reason) << "\n";
  if (!run.report.note.empty()) log << "note: " << run.report.note << "\n";

  if (!cfg.csv_path.empty()) {
    std::ofstream out(cfg.csv_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open csv output: " + cfg.csv_path);
    out << run.report.to_csv();
    log << "csv: " << cfg.csv_path << "\n";
  }
  if (!cfg.svg_pattern.empty()) {
    for (const auto& [step, set] : snapshots) {
      std::string path = cfg.svg_pattern;
      auto pos = path.find("{step}");
      if (pos != std::string::npos) path.replace(pos, 6, std::to_string(step));
      if (dim_of(set) == 3) continue;  // per-slice rendering is the render command's job
      write_svg_file(set, path);
    }
    log << "svg frames: " << snapshots.size() << "\n";
  }

  // Run invariants.
  for (const auto& rec : run.report.steps) {
    if (!(rec.dh_prev >= 0.0)) {
      log << "assertion failed: nonnegative step distance (step " << rec.step << ")\n";
      return 2;
    }
  }
  if (run.report.stop_reason == StopReason::tolerance_met) {
    const auto& last = run.report.steps.back();
    if (!(last.dh_prev < cfg.spec.tol)) {
      log << "assertion failed: final increment below tol\n";
      return 2;
    }
  }
  if (cfg.spec.op == OperatorKind::minkowski &&
      std::holds_alternative<ConvexPolygon>(cfg.input)) {
    double w0 = mean_width(std::get<ConvexPolygon>(cfg.input));
    for (const auto& rec : run.report.steps) {
      if (std::isnan(rec.mean_width)) continue;
      if (std::abs(rec.mean_width - w0) > 1e-9 * std::max(1.0, w0)) {
        log << "assertion failed: mean width preserved (step " << rec.step << ")\n";
        return 2;
      }
    }
  }
  return 0;
}

}  // namespace symlab
