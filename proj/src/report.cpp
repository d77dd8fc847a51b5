#include "pcd/report.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "pcd/efficiency.hpp"
#include "pcd/kinematics.hpp"
#include "pcd/quasistatic.hpp"

namespace pcd {

using nlohmann::ordered_json;

std::string format_sig9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

double round_sig9(double value) { return std::strtod(format_sig9(value).c_str(), nullptr); }

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
}

double get_number(const ordered_json& obj, const char* field) {
  if (!obj.contains(field)) throw ConfigError(std::string("missing field: ") + field);
  if (!obj[field].is_number()) throw ConfigError(std::string("field must be a number: ") + field);
  return obj[field].get<double>();
}

int get_int(const ordered_json& obj, const char* field) {
  if (!obj.contains(field)) throw ConfigError(std::string("missing field: ") + field);
  if (!obj[field].is_number_integer()) {
    throw ConfigError(std::string("field must be an integer: ") + field);
  }
  return obj[field].get<int>();
}

MeshEfficiencySet parse_mesh(const ordered_json& node, const char* field) {
  if (node.is_number()) return MeshEfficiencySet::uniform(node.get<double>());
  if (node.is_object()) {
    MeshEfficiencySet m;
    m.eta_sp1 = get_number(node, "eta_sp1");
    m.eta_p1r1 = get_number(node, "eta_p1r1");
    m.eta_r1p1 = get_number(node, "eta_r1p1");
    m.eta_p1s = get_number(node, "eta_p1s");
    m.eta_r2p2 = get_number(node, "eta_r2p2");
    m.eta_p2r2 = get_number(node, "eta_p2r2");
    return m;
  }
  throw ConfigError(std::string(field) + " must be a scalar or an object with the six eta_* values");
}

IntRange parse_range(const ordered_json& node, const char* field) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number_integer() ||
      !node[1].is_number_integer()) {
    throw ConfigError(std::string(field) + " must be an integer pair [lo, hi]");
  }
  return IntRange{node[0].get<int>(), node[1].get<int>()};
}

ordered_json rational_node(std::int64_t num, std::int64_t den) {
  // Exact fraction in the tooth-count form (unreduced), plus its decimal.
  ordered_json n;
  n["exact"] = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  n["value"] = round_sig9(static_cast<double>(num) / static_cast<double>(den));
  return n;
}

ordered_json power_flow_node(const PowerFlowReport& rep, bool planetary_stage) {
  ordered_json n;
  if (planetary_stage) {
    n["torque_s_nm"] = round_sig9(rep.torque_s);
    n["torque_p1_nm"] = round_sig9(rep.torque_p1);
    n["torque_r1_nm"] = round_sig9(rep.torque_r1);
  } else {
    n["torque_r2_nm"] = round_sig9(rep.torque_r2);
    n["torque_p2_nm"] = round_sig9(rep.torque_p2);
  }
  n["power_in_w"] = round_sig9(rep.power_in);
  n["power_out_w"] = round_sig9(rep.power_out);
  n["power_loss_w"] = round_sig9(rep.power_loss);
  n["efficiency"] = round_sig9(rep.efficiency);
  return n;
}

void flatten(const ordered_json& node, const std::string& prefix, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (node.is_number_float()) {
    out += prefix + "," + format_sig9(node.get<double>()) + "\n";
  } else {
    out += prefix + "," + node.dump() + "\n";
  }
}

std::string to_csv_key_value(const ordered_json& doc) {
  std::string out = "field,value\n";
  flatten(doc, "", out);
  return out;
}

}  // namespace

AnalysisConfig parse_analysis_config(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  if (!doc.contains("geometry")) throw ConfigError("missing field: geometry");
  const auto& g = doc["geometry"];

  AnalysisConfig cfg;
  cfg.train.input_stage.z_s = get_int(g, "z_s");
  cfg.train.input_stage.z_p1 = get_int(g, "z_p1");
  cfg.train.input_stage.z_r1 = get_int(g, "z_r1");
  cfg.train.input_stage.n_planets = g.contains("n_planets") ? get_int(g, "n_planets") : 3;
  cfg.train.output_stage.z_p2 = get_int(g, "z_p2");
  cfg.train.output_stage.z_r2 = get_int(g, "z_r2");

  if (!doc.contains("mesh_efficiency")) throw ConfigError("missing field: mesh_efficiency");
  cfg.mesh = parse_mesh(doc["mesh_efficiency"], "mesh_efficiency");

  if (doc.contains("operating_point")) {
    const auto& op = doc["operating_point"];
    cfg.operating_point = OperatingPoint{get_number(op, "input_torque_nm"),
                                         get_number(op, "input_speed_rad_s")};
  }
  return cfg;
}

SweepSpec parse_sweep_spec(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ConfigError("sweep spec root must be an object");

  SweepSpec spec;
  const std::string stage = doc.value("stage", "");
  if (stage == "2K-H") {
    spec.stage = SweepStage::planetary;
  } else if (stage == "K-H-V") {
    spec.stage = SweepStage::khv;
  } else if (stage == "compound") {
    spec.stage = SweepStage::compound;
  } else {
    throw ConfigError("stage must be one of \"2K-H\", \"K-H-V\", \"compound\"");
  }

  const std::string dir = doc.value("direction", "");
  if (dir == "forward") {
    spec.direction = Direction::forward;
  } else if (dir == "backward") {
    spec.direction = Direction::backward;
  } else {
    throw ConfigError("direction must be \"forward\" or \"backward\"");
  }

  if (doc.contains("ratio_grid")) {
    if (!doc["ratio_grid"].is_array()) throw ConfigError("ratio_grid must be an array");
    spec.ratio_grid = doc["ratio_grid"].get<std::vector<double>>();
  } else if (doc.contains("ratio_range")) {
    const auto& r = doc["ratio_range"];
    spec.ratio_grid = log_ratio_grid(get_number(r, "min"), get_number(r, "max"),
                                     get_int(r, "count"));
  } else {
    spec.ratio_grid = log_ratio_grid(1.0, 1000.0, 200);
  }

  if (!doc.contains("mesh_grid") || !doc["mesh_grid"].is_array()) {
    throw ConfigError("missing array field: mesh_grid");
  }
  spec.mesh_grid = doc["mesh_grid"].get<std::vector<double>>();
  spec.split = doc.value("split", 0.5);
  return spec;
}

DesignQuery parse_design_query(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ConfigError("design query root must be an object");

  DesignQuery q;
  q.target_ratio = get_number(doc, "target_ratio");
  q.ratio_tolerance = doc.contains("ratio_tolerance") ? get_number(doc, "ratio_tolerance") : 0.01;

  if (!doc.contains("bounds") || !doc["bounds"].is_object()) {
    throw ConfigError("missing object field: bounds");
  }
  const auto& b = doc["bounds"];
  if (!b.contains("z_s") || !b.contains("z_p1") || !b.contains("z_p2")) {
    throw ConfigError("bounds must provide z_s, z_p1 and z_p2 ranges");
  }
  q.z_s_bounds = parse_range(b["z_s"], "bounds.z_s");
  q.z_p1_bounds = parse_range(b["z_p1"], "bounds.z_p1");
  q.z_p2_bounds = parse_range(b["z_p2"], "bounds.z_p2");
  if (b.contains("z_r1")) q.z_r1_bounds = parse_range(b["z_r1"], "bounds.z_r1");
  if (b.contains("z_r2")) q.z_r2_bounds = parse_range(b["z_r2"], "bounds.z_r2");

  q.n_planets = doc.contains("n_planets") ? get_int(doc, "n_planets") : 3;
  if (doc.contains("mesh_efficiency")) q.mesh = parse_mesh(doc["mesh_efficiency"], "mesh_efficiency");

  const std::string merit = doc.value("direction_of_merit", "forward");
  if (merit == "forward") {
    q.merit = MeritDirection::forward;
  } else if (merit == "backward") {
    q.merit = MeritDirection::backward;
  } else if (merit == "both") {
    q.merit = MeritDirection::both;
  } else {
    throw ConfigError("direction_of_merit must be \"forward\", \"backward\" or \"both\"");
  }
  q.forbid_self_locking = doc.value("forbid_self_locking", true);
  return q;
}

std::string render_analysis(const AnalysisConfig& config, OutputFormat format) {
  require_valid(config.train);
  require_valid(config.mesh);

  const auto& in = config.train.input_stage;
  const auto& out = config.train.output_stage;

  ordered_json doc;
  doc["units"] = {{"speed", "rad/s"}, {"torque", "N*m"}, {"power", "W"}};
  doc["geometry"] = {{"z_s", in.z_s},   {"z_p1", in.z_p1}, {"z_r1", in.z_r1},
                     {"n_planets", in.n_planets}, {"z_p2", out.z_p2}, {"z_r2", out.z_r2}};
  doc["mesh_efficiency"] = {{"eta_sp1", config.mesh.eta_sp1},   {"eta_p1r1", config.mesh.eta_p1r1},
                            {"eta_r1p1", config.mesh.eta_r1p1}, {"eta_p1s", config.mesh.eta_p1s},
                            {"eta_r2p2", config.mesh.eta_r2p2}, {"eta_p2r2", config.mesh.eta_p2r2}};

  doc["ratios"]["i_2kh"] = rational_node(in.z_s + in.z_r1, in.z_s);
  doc["ratios"]["i_khv"] = rational_node(out.z_r2, 1);
  doc["ratios"]["i_3khv"] =
      rational_node(static_cast<std::int64_t>(out.z_r2) * (in.z_s + in.z_r1), in.z_s);

  const EfficiencyReport rep = compound_efficiencies(config.train, config.mesh);
  doc["efficiency"] = {{"eta_sh", round_sig9(rep.eta_sh)},   {"eta_hs", round_sig9(rep.eta_hs)},
                       {"eta_hr2", round_sig9(rep.eta_hr2)}, {"eta_r2h", round_sig9(rep.eta_r2h)},
                       {"eta_sr2", round_sig9(rep.eta_sr2)}, {"eta_r2s", round_sig9(rep.eta_r2s)},
                       {"self_locking", rep.self_locking}};
  doc["self_lock_threshold"] = rational_node(out.z_p2, out.z_r2);

  if (config.operating_point) {
    // Chain the two forward stage solutions: the 2K-H output power at the
    // carrier becomes the K-H-V input.
    DriveCase first{Direction::forward, config.operating_point->input_torque_nm,
                    config.operating_point->input_speed_rad_s, config.mesh};
    const PowerFlowReport rep1 = solve_case(config.train.input_stage, first);
    const double omega_h = std::abs(rep1.speeds.omega_h);
    DriveCase second{Direction::forward, rep1.power_out / omega_h, omega_h, config.mesh};
    const PowerFlowReport rep2 = solve_case(config.train.output_stage, second);

    doc["power_flow"]["input_stage"] = power_flow_node(rep1, true);
    doc["power_flow"]["output_stage"] = power_flow_node(rep2, false);
    doc["power_flow"]["overall"] = {
        {"power_in_w", round_sig9(rep1.power_in)},
        {"power_out_w", round_sig9(rep2.power_out)},
        {"power_loss_w", round_sig9(rep1.power_loss + rep2.power_loss)},
        {"efficiency", round_sig9(rep2.power_out / rep1.power_in)}};
  }

  if (format == OutputFormat::csv) return to_csv_key_value(doc);
  return doc.dump(2) + "\n";
}

std::string render_sweep(const SweepResult& result, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "ratio";
    for (double m : result.spec.mesh_grid) out += ",eta_mesh=" + format_sig9(m);
    out += "\n";
    for (std::size_t r = 0; r < result.spec.ratio_grid.size(); ++r) {
      out += format_sig9(result.spec.ratio_grid[r]);
      for (std::size_t m = 0; m < result.spec.mesh_grid.size(); ++m) {
        out += "," + format_sig9(result.values[m][r]);
      }
      out += "\n";
    }
    return out;
  }

  ordered_json doc;
  doc["stage"] = result.spec.stage == SweepStage::planetary
                     ? "2K-H"
                     : (result.spec.stage == SweepStage::khv ? "K-H-V" : "compound");
  doc["direction"] = result.spec.direction == Direction::forward ? "forward" : "backward";
  if (result.spec.stage == SweepStage::compound) doc["split"] = round_sig9(result.spec.split);
  ordered_json ratios = ordered_json::array();
  for (double v : result.spec.ratio_grid) ratios.push_back(round_sig9(v));
  doc["ratio_grid"] = std::move(ratios);
  ordered_json meshes = ordered_json::array();
  for (double v : result.spec.mesh_grid) meshes.push_back(round_sig9(v));
  doc["mesh_grid"] = std::move(meshes);
  ordered_json values = ordered_json::array();
  for (const auto& row : result.values) {
    ordered_json jrow = ordered_json::array();
    for (double v : row) jrow.push_back(round_sig9(v));
    values.push_back(std::move(jrow));
  }
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

std::string render_search(const DesignQuery& query, const std::vector<DesignCandidate>& candidates,
                          OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out =
        "z_s,z_p1,z_r1,z_p2,z_r2,n_planets,ratio_exact,ratio,ratio_error,"
        "eta_sh,eta_hs,eta_hr2,eta_r2h,eta_sr2,eta_r2s,self_locking\n";
    for (const auto& c : candidates) {
      const auto& in = c.train.input_stage;
      const auto& cyc = c.train.output_stage;
      out += std::to_string(in.z_s) + "," + std::to_string(in.z_p1) + "," +
             std::to_string(in.z_r1) + "," + std::to_string(cyc.z_p2) + "," +
             std::to_string(cyc.z_r2) + "," + std::to_string(in.n_planets) + "," +
             std::to_string(static_cast<std::int64_t>(cyc.z_r2) * (in.z_s + in.z_r1)) + "/" +
             std::to_string(in.z_s) + "," + format_sig9(c.achieved_ratio.to_double()) + "," +
             format_sig9(c.ratio_error) + "," + format_sig9(c.report.eta_sh) + "," +
             format_sig9(c.report.eta_hs) + "," + format_sig9(c.report.eta_hr2) + "," +
             format_sig9(c.report.eta_r2h) + "," + format_sig9(c.report.eta_sr2) + "," +
             format_sig9(c.report.eta_r2s) + "," + (c.report.self_locking ? "true" : "false") +
             "\n";
    }
    return out;
  }

  ordered_json doc;
  doc["target_ratio"] = round_sig9(query.target_ratio);
  doc["ratio_tolerance"] = round_sig9(query.ratio_tolerance);
  doc["candidate_count"] = candidates.size();
  ordered_json arr = ordered_json::array();
  for (const auto& c : candidates) {
    const auto& in = c.train.input_stage;
    const auto& cyc = c.train.output_stage;
    ordered_json n;
    n["z_s"] = in.z_s;
    n["z_p1"] = in.z_p1;
    n["z_r1"] = in.z_r1;
    n["z_p2"] = cyc.z_p2;
    n["z_r2"] = cyc.z_r2;
    n["n_planets"] = in.n_planets;
    n["ratio"] = rational_node(static_cast<std::int64_t>(cyc.z_r2) * (in.z_s + in.z_r1), in.z_s);
    n["ratio_error"] = round_sig9(c.ratio_error);
    n["eta_sr2"] = round_sig9(c.report.eta_sr2);
    n["eta_r2s"] = round_sig9(c.report.eta_r2s);
    n["self_locking"] = c.report.self_locking;
    arr.push_back(std::move(n));
  }
  doc["candidates"] = std::move(arr);
  return doc.dump(2) + "\n";
}

}  // namespace pcd
