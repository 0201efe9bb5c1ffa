#include "tamed/report.hpp"

#include <json.hpp>
#include <sstream>

namespace tamed {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Partial: return "PARTIAL";
  }
  return "?";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::Match: return 0;
    case Verdict::Partial: return 2;
    case Verdict::Mismatch: return 3;
  }
  return 1;
}

Character run_topological(const ProblemConfig& cfg) {
  return topological_index(cfg.components, cfg.taming(), cfg.window(),
                           cfg.tables);
}

Character run_analytic(const ProblemConfig& cfg, const SolveOptions& opt) {
  if (!cfg.analytic)
    throw ConfigError("this command needs an [analytic] section in the config");
  return analytic_index(cfg.analytic->plane_model(), cfg.taming(), cfg.window(),
                        cfg.analytic->tol, opt);
}

ComparisonReport run_compare(const ProblemConfig& cfg, const SolveOptions& opt) {
  if (!cfg.analytic)
    throw ConfigError("compare needs an [analytic] section in the config");
  const TamingData taming = cfg.taming();
  const Window window = cfg.window();
  PlaneRotationModel model = cfg.analytic->plane_model();

  ComparisonReport rep;
  rep.rank = cfg.rank;
  rep.taming = cfg.v;
  rep.window_lo = cfg.window_lo;
  rep.window_hi = cfg.window_hi;

  Character topo = run_topological(cfg);
  if (topo.support_bound()) rep.support_bound = *topo.support_bound();

  auto adm = admissibility_report(plane_admissibility_profile(model, taming));
  rep.admissibility_pass = adm.pass;
  rep.admissibility_last_ratio = adm.last_ratio;
  if (!adm.pass)
    throw TamedError("compare: admissibility check failed for the analytic model");

  const Rat& v = cfg.v[0];
  Int m_lo = rat_ceil(cfg.window_lo / v);
  Int m_hi = rat_floor(cfg.window_hi / v);
  std::vector<int> modes;
  for (Int m = m_lo; m <= m_hi; ++m) modes.push_back(m.convert_to<int>());
  auto results = solve_modes(model, taming, modes, cfg.analytic->tol, opt);

  bool any_mismatch = false, any_missing = false;
  for (const auto& r : results) {
    ReportRow row;
    row.weight = {r.mode};
    row.topological = topo.multiplicity(row.weight);
    if (r.solved) {
      row.analytic = Int(r.dims.even) - Int(r.dims.odd);
      row.match = (*row.analytic == row.topological);
      if (!row.match) any_mismatch = true;
    } else {
      row.match = false;
      row.note = r.error;
      any_missing = true;
    }
    rep.rows.push_back(std::move(row));
  }
  rep.verdict = any_mismatch ? Verdict::Mismatch
               : any_missing ? Verdict::Partial
                             : Verdict::Match;
  return rep;
}

std::string render_character_text(const Character& c) { return c.render(); }

namespace {

nlohmann::ordered_json weight_json(const Weight& w) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (auto x : w) a.push_back(x);
  return a;
}

nlohmann::ordered_json window_json(const Window& w) {
  nlohmann::ordered_json j;
  j["lo"] = w.lo ? to_string(*w.lo) : "-inf";
  j["hi"] = w.hi ? to_string(*w.hi) : "+inf";
  return j;
}

}  // namespace

std::string render_character_machine(const Character& c,
                                     const std::string& mode) {
  nlohmann::ordered_json j;
  j["format"] = "tamed-index-report";
  j["version"] = 1;
  j["mode"] = mode;
  j["rank"] = c.rank();
  j["window"] = window_json(c.window());
  if (c.support_bound()) j["support_bound"] = to_string(*c.support_bound());
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [w, m] : c.entries()) {
    nlohmann::ordered_json e;
    e["weight"] = weight_json(w);
    e["mult"] = m.str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string render_report_text(const ComparisonReport& r) {
  std::ostringstream out;
  out << "window " << to_string(r.window_lo) << " : " << to_string(r.window_hi)
      << "   taming (";
  for (std::size_t i = 0; i < r.taming.size(); ++i) {
    if (i) out << ',';
    out << to_string(r.taming[i]);
  }
  out << ")\n";
  if (r.support_bound)
    out << "support bound C = " << to_string(*r.support_bound) << "\n";
  out << "admissibility " << (r.admissibility_pass ? "PASS" : "FAIL") << "\n";
  out << "weight  topological  analytic  match\n";
  for (const auto& row : r.rows) {
    out << '(';
    for (std::size_t i = 0; i < row.weight.size(); ++i) {
      if (i) out << ',';
      out << row.weight[i];
    }
    out << ")  " << row.topological.str() << "  ";
    if (row.analytic)
      out << row.analytic->str();
    else
      out << "unavailable";
    out << "  " << (row.match ? "yes" : "NO");
    if (!row.note.empty()) out << "   [" << row.note << "]";
    out << '\n';
  }
  out << "verdict " << verdict_name(r.verdict) << "\n";
  return out.str();
}

std::string render_report_machine(const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["format"] = "tamed-index-report";
  j["version"] = 1;
  j["mode"] = "compare";
  j["rank"] = r.rank;
  nlohmann::ordered_json tv = nlohmann::ordered_json::array();
  for (const auto& x : r.taming) tv.push_back(to_string(x));
  j["taming"] = std::move(tv);
  j["window"] = {{"lo", to_string(r.window_lo)}, {"hi", to_string(r.window_hi)}};
  if (r.support_bound) j["support_bound"] = to_string(*r.support_bound);
  j["admissibility"] = {{"pass", r.admissibility_pass},
                        {"last_ratio", r.admissibility_last_ratio}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json e;
    e["weight"] = weight_json(row.weight);
    e["topological"] = row.topological.str();
    if (row.analytic)
      e["analytic"] = row.analytic->str();
    else
      e["analytic"] = nullptr;
    e["match"] = row.match;
    if (!row.note.empty()) e["note"] = row.note;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  j["verdict"] = verdict_name(r.verdict);
  return j.dump(2) + "\n";
}

}  // namespace tamed
