#include "idexp/document.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "idexp/blowup.hpp"
#include "idexp/charprep.hpp"
#include "idexp/coeff.hpp"
#include "idexp/cone.hpp"
#include "idexp/error.hpp"
#include "idexp/newton.hpp"
#include "idexp/parse.hpp"
#include "idexp/svg.hpp"

namespace idexp {

namespace {

using ojson = nlohmann::ordered_json;

ojson int_json(const BigInt& n) {
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max()) {
    return n.convert_to<long long>();
  }
  return n.convert_to<std::string>();
}

ojson rat_json(const Rat& q) { return ojson::array({int_json(numerator(q)), int_json(denominator(q))}); }

ojson extrat_json(const ExtRat& e) {
  if (!e.is_finite()) return "inf";
  return rat_json(e.value);
}

std::string rat_str(const Rat& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << '/' << denominator(q);
  return out.str();
}

ojson qvec_json(const QVec& v) {
  ojson out = ojson::array();
  for (const Rat& q : v) out.push_back(rat_json(q));
  return out;
}

ojson polyhedron_json(const OrthantPolyhedron& p) {
  ojson out;
  out["dim"] = p.dim();
  ojson pts = ojson::array();
  for (const QVec& q : p.points()) pts.push_back(qvec_json(q));
  out["points"] = pts;
  ojson verts = ojson::array();
  for (const QVec& q : p.vertices()) verts.push_back(qvec_json(q));
  out["vertices"] = verts;
  out["delta"] = extrat_json(p.delta());
  return out;
}

ojson system_json(const PairSystem& s) {
  ojson comps = ojson::array();
  for (const Pair& comp : s.components) {
    ojson c;
    ojson gens = ojson::array();
    for (const Poly& g : comp.gens) gens.push_back(g.str());
    c["generators"] = gens;
    c["b"] = rat_str(comp.b);
    comps.push_back(c);
  }
  return comps;
}

ojson names_json(const VarSplitPtr& split) {
  ojson out = ojson::array();
  for (const std::string& n : split->names()) out.push_back(n);
  return out;
}

struct Doc {
  Field field = Field::rationals();
  VarSplitPtr split;
  std::vector<PairSystem> systems;  // [0] primary, optional [1] secondary
  std::optional<NuWeights> weights;
  std::optional<LSBScript> script;
  int degree_bound = 64;
  int search_depth = 3;
  int extensions = 1;
  ojson normalized;
};

const ojson& need(const ojson& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw input_error(std::string("document needs ") + what);
  }
  return j.at(key);
}

std::vector<std::string> string_list(const ojson& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw input_error(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

int int_option(const ojson& j, const char* key, int fallback, int minimum) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw input_error(std::string("option ") + key + " must be an integer");
  const long long n = v.get<long long>();
  if (n < minimum || n > 1000000) throw input_error(std::string("option ") + key + " out of range");
  return static_cast<int>(n);
}

PairSystem parse_system(const ojson& arr, const Field& field, const VarSplitPtr& split,
                        const char* what) {
  if (!arr.is_array() || arr.empty()) {
    throw input_error(std::string(what) + " must be a nonempty array of pairs");
  }
  std::vector<Pair> comps;
  for (const auto& entry : arr) {
    std::vector<Poly> gens;
    for (const std::string& text :
         string_list(need(entry, "generators", "generators in every pair"), "generators")) {
      gens.push_back(parse_poly(text, field, split));
    }
    const auto& bj = need(entry, "b", "a weight b in every pair");
    if (!bj.is_string()) throw input_error("weight b must be a rational string");
    const Rat b = parse_rational(bj.get<std::string>());
    if (b <= 0) throw input_error("weight b must be positive");
    comps.emplace_back(field, split, std::move(gens), b);
  }
  return PairSystem(field, split, std::move(comps));
}

Doc parse_document(const std::string& text, const RunOverrides& overrides) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("document is not valid JSON");
  if (!j.is_object()) throw input_error("document must be a JSON object");

  Doc doc;
  const ojson& fj = need(j, "field", "a field ('Q' or {'Fp': p})");
  if (fj.is_string() && fj.get<std::string>() == "Q") {
    doc.field = Field::rationals();
  } else if (fj.is_object() && fj.contains("Fp") && fj.at("Fp").is_number_integer()) {
    doc.field = Field::prime(fj.at("Fp").get<long long>());
  } else {
    throw input_error("field must be 'Q' or {'Fp': p}");
  }

  const ojson& vj = need(j, "variables", "a variables block {u, y}");
  std::vector<std::string> u_names =
      string_list(need(vj, "u", "variables.u"), "variables.u");
  std::vector<std::string> y_names;
  if (vj.contains("y")) y_names = string_list(vj.at("y"), "variables.y");
  doc.split = make_split(u_names, y_names);

  doc.systems.push_back(
      parse_system(need(j, "pairs", "a pairs array"), doc.field, doc.split, "pairs"));
  if (j.contains("pairs2")) {
    doc.systems.push_back(parse_system(j.at("pairs2"), doc.field, doc.split, "pairs2"));
  }

  if (j.contains("weights")) {
    const ojson& wj = j.at("weights");
    NuWeights w;
    for (const std::string& t :
         string_list(need(wj, "alpha", "weights.alpha"), "weights.alpha")) {
      w.alpha.push_back(parse_rational(t));
    }
    for (const std::string& t :
         string_list(need(wj, "beta", "weights.beta"), "weights.beta")) {
      w.beta.push_back(parse_rational(t));
    }
    doc.weights = std::move(w);
  }

  if (j.contains("script")) {
    const ojson& sj = j.at("script");
    if (!sj.is_array()) throw input_error("script must be an array of steps");
    LSBScript script;
    for (const auto& step : sj) {
      if (!step.is_object()) throw input_error("script steps must be objects");
      if (step.contains("adjoin")) {
        if (!step.at("adjoin").is_string()) throw input_error("adjoin needs a name");
        script.steps.push_back(AdjoinStep{step.at("adjoin").get<std::string>()});
      } else if (step.contains("center") && step.contains("chart")) {
        BlowupStep b;
        b.center = string_list(step.at("center"), "center");
        if (!step.at("chart").is_string()) throw input_error("chart must be a name");
        b.chart = step.at("chart").get<std::string>();
        script.steps.push_back(b);
      } else {
        throw input_error("script steps are {adjoin} or {center, chart}");
      }
    }
    doc.script = std::move(script);
  }

  ojson options = j.contains("options") ? j.at("options") : ojson::object();
  if (!options.is_object()) throw input_error("options must be an object");
  doc.degree_bound = overrides.degree_bound
                         ? *overrides.degree_bound
                         : int_option(options, "degree_bound", 64, 1);
  doc.search_depth = overrides.search_depth
                         ? *overrides.search_depth
                         : int_option(options, "search_depth", 3, 0);
  doc.extensions = overrides.extensions ? *overrides.extensions
                                        : int_option(options, "extensions", 1, 0);

  // Normalized embedding: canonical renderings, effective options.
  ojson norm;
  if (doc.field.is_rationals()) {
    norm["field"] = "Q";
  } else {
    norm["field"] = ojson{{"Fp", doc.field.characteristic()}};
  }
  norm["variables"] = ojson{{"u", u_names}, {"y", y_names}};
  norm["pairs"] = system_json(doc.systems[0]);
  if (doc.systems.size() > 1) norm["pairs2"] = system_json(doc.systems[1]);
  if (doc.weights) {
    ojson alpha = ojson::array();
    for (const Rat& q : doc.weights->alpha) alpha.push_back(rat_str(q));
    ojson beta = ojson::array();
    for (const Rat& q : doc.weights->beta) beta.push_back(rat_str(q));
    norm["weights"] = ojson{{"alpha", alpha}, {"beta", beta}};
  }
  if (doc.script) {
    ojson steps = ojson::array();
    for (const ScriptStep& s : doc.script->steps) {
      if (std::holds_alternative<AdjoinStep>(s)) {
        steps.push_back(ojson{{"adjoin", std::get<AdjoinStep>(s).name}});
      } else {
        const BlowupStep& b = std::get<BlowupStep>(s);
        steps.push_back(ojson{{"center", b.center}, {"chart", b.chart}});
      }
    }
    norm["script"] = steps;
  }
  norm["options"] = ojson{{"degree_bound", doc.degree_bound},
                          {"search_depth", doc.search_depth},
                          {"extensions", doc.extensions}};
  doc.normalized = std::move(norm);
  return doc;
}

const Pair& single_pair(const PairSystem& s, const char* cmd) {
  if (s.components.size() != 1) {
    throw input_error(std::string(cmd) + " needs exactly one pair");
  }
  return s.components.front();
}

std::string status_str(PrepStatus st) {
  switch (st) {
    case PrepStatus::prepared:
      return "prepared";
    case PrepStatus::truncated_at_degree_bound:
      return "truncated-at-degree-bound";
    default:
      return "hypothesis-warning";
  }
}

ojson trace_json(const LsbTrace& tr) {
  ojson out;
  ojson steps = ojson::array();
  for (const LsbStepRecord& rec : tr.steps) {
    ojson s;
    s["index"] = rec.index;
    s["description"] = rec.description;
    s["permissible"] = rec.permissible;
    s["executed"] = rec.executed;
    steps.push_back(s);
  }
  out["steps"] = steps;
  out["completed"] = tr.completed;
  out["stop_index"] = tr.stop_index;
  ojson fin;
  fin["variables"] = names_json(tr.final_system.split);
  fin["components"] = system_json(tr.final_system);
  out["final"] = fin;
  return out;
}

ojson command_payload(const std::string& cmd, const Doc& doc, const PairSystem& sys) {
  if (cmd == "order") {
    ojson out;
    ojson comps = ojson::array();
    for (const Pair& comp : sys.components) {
      ojson c;
      c["b"] = rat_str(comp.b);
      c["ideal_order"] = extrat_json(ideal_order(comp));
      c["order"] = extrat_json(ord_origin_pair(comp));
      comps.push_back(c);
    }
    out["components"] = comps;
    out["order"] = extrat_json(ord_origin_system(sys));
    return out;
  }
  if (cmd == "newton") return polyhedron_json(newton_polyhedron(sys));
  if (cmd == "poly" || cmd == "plot") return polyhedron_json(pair_polyhedron(sys));
  if (cmd == "ideal-poly") {
    std::vector<Poly> gens;
    for (const Pair& comp : sys.components) {
      gens.insert(gens.end(), comp.gens.begin(), comp.gens.end());
    }
    return polyhedron_json(ideal_polyhedron(gens));
  }
  if (cmd == "coeff") {
    const CoeffPair cp = coefficient_pair(single_pair(sys, "coeff"));
    ojson out;
    out["b"] = rat_str(cp.b);
    out["u_variables"] = names_json(cp.usplit);
    ojson levels = ojson::array();
    for (size_t l = 0; l < cp.levels.size(); ++l) {
      ojson lv;
      lv["level"] = l;
      lv["weight"] = rat_str(cp.b - Rat(l));
      ojson gens = ojson::array();
      for (const Poly& g : cp.levels[l]) gens.push_back(g.str());
      lv["generators"] = gens;
      levels.push_back(lv);
    }
    out["levels"] = levels;
    out["order"] = extrat_json(coeff_order(cp));
    out["order_clamped"] = extrat_json(coeff_order_clamped(cp));
    return out;
  }
  if (cmd == "tangent-cone") {
    const HomogIdeal tc = tangent_cone(sys);
    ojson out;
    out["variables"] = names_json(tc.split);
    ojson gens = ojson::array();
    for (const Poly& g : tc.gens) gens.push_back(g.str());
    out["generators"] = gens;
    return out;
  }
  if (cmd == "directrix") {
    const LinearSpan d = directrix(tangent_cone(sys));
    ojson out;
    out["dimension"] = d.basis.size();
    ojson basis = ojson::array();
    for (const Poly& f : d.basis) basis.push_back(f.str());
    out["basis"] = basis;
    return out;
  }
  if (cmd == "ridge") {
    const DirRid dr = dir_rid_pairs(sys);
    ojson out;
    out["determined"] = dr.ridge_determined;
    ojson gens = ojson::array();
    for (const Pair& comp : dr.rid.components) {
      ojson g;
      g["q"] = rat_str(comp.b);
      g["form"] = comp.gens.empty() ? "0" : comp.gens.front().str();
      gens.push_back(g);
    }
    out["generators"] = gens;
    out["matches_directrix"] = dr.roots_match;
    return out;
  }
  if (cmd == "max-contact") {
    const MaxContact mc =
        maximal_contact(single_pair(sys, "max-contact"), doc.degree_bound);
    ojson out;
    out["degree_bound"] = mc.degree_bound;
    ojson els = ojson::array();
    for (const ContactElement& el : mc.elements) {
      ojson e;
      e["y"] = sys.split->name(el.y_index);
      e["eps"] = rat_json(el.eps.rep());
      e["witness"] = el.witness.exponents();
      e["generator"] = el.generator;
      e["z"] = el.z.str();
      els.push_back(e);
    }
    out["elements"] = els;
    ojson tr;
    tr["b"] = rat_str(mc.transformed.b);
    ojson gens = ojson::array();
    for (const Poly& g : mc.transformed.gens) gens.push_back(g.str());
    tr["generators"] = gens;
    out["transformed"] = tr;
    return out;
  }
  if (cmd == "prepare") {
    const PreparationReport rep = prepare(sys, doc.degree_bound);
    ojson out;
    out["status"] = status_str(rep.status);
    out["hypothesis_ok"] = rep.hypothesis_ok;
    out["hypothesis_known"] = rep.hypothesis_known;
    out["truncated"] = rep.truncated;
    ojson record = ojson::array();
    for (const TranslationRecord& step : rep.record) {
      ojson s;
      s["y"] = step.y_name;
      s["c"] = rat_json(step.c.rep());
      s["v"] = step.v;
      record.push_back(s);
    }
    out["record"] = record;
    out["polyhedron"] = polyhedron_json(rep.polyhedron);
    out["delta"] = extrat_json(rep.delta);
    out["final"] = system_json(rep.final_system);
    out["notes"] = rep.notes;
    return out;
  }
  if (cmd == "delta") {
    const DeltaValue dv = delta_invariant(sys, doc.degree_bound);
    ojson out;
    out["delta"] = extrat_json(dv.delta);
    out["status"] = status_str(dv.status);
    return out;
  }
  if (cmd == "nu-poly") {
    if (!doc.weights) throw input_error("nu polyhedron needs a weights block");
    return polyhedron_json(nu_polyhedron(sys, *doc.weights));
  }
  throw input_error("unknown command: " + cmd);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "order",     "newton", "poly",        "ideal-poly",  "coeff",
      "directrix", "ridge",  "tangent-cone", "max-contact", "prepare",
      "delta",     "nu-poly", "transform",   "lsb",         "probe-equiv",
      "plot"};
  return names;
}

CommandResult run_command(const std::string& command, const std::string& document_text,
                          const RunOverrides& overrides) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw input_error("unknown command: " + command);
  }
  const Doc doc = parse_document(document_text, overrides);

  ojson report;
  report["command"] = command;
  report["input"] = doc.normalized;

  std::optional<std::string> svg;
  if (command == "transform" || command == "lsb") {
    if (!doc.script) throw input_error(command + " needs a script");
    const LsbTrace tr = run_lsb(doc.systems[0], *doc.script);
    if (command == "lsb") {
      ojson t = trace_json(tr);
      for (auto& [k, v] : t.items()) report[k] = v;
    } else {
      report["completed"] = tr.completed;
      report["stop_index"] = tr.stop_index;
      ojson fin;
      fin["variables"] = names_json(tr.final_system.split);
      fin["components"] = system_json(tr.final_system);
      report["final"] = fin;
    }
  } else if (command == "probe-equiv") {
    if (doc.systems.size() < 2) {
      throw input_error("probe-equiv needs a second system (pairs2)");
    }
    const ProbeResult pr =
        probe_equiv(doc.systems[0], doc.systems[1], doc.search_depth, doc.extensions);
    report["witness_found"] = pr.witness_found;
    report["scripts_examined"] = pr.scripts_examined;
    if (pr.witness_found) {
      report["permissible_for"] = pr.permissible_for;
      ojson steps = ojson::array();
      for (const ScriptStep& s : pr.script.steps) {
        if (std::holds_alternative<AdjoinStep>(s)) {
          steps.push_back(ojson{{"adjoin", std::get<AdjoinStep>(s).name}});
        } else {
          const BlowupStep& b = std::get<BlowupStep>(s);
          steps.push_back(ojson{{"center", b.center}, {"chart", b.chart}});
        }
      }
      report["script"] = steps;
    } else {
      report["message"] = "no distinguishing sequence found";
    }
    report["notes"] = pr.notes;
  } else {
    ojson payload = command_payload(command, doc, doc.systems[0]);
    for (auto& [k, v] : payload.items()) report[k] = v;
    if (doc.systems.size() > 1) {
      report["second"] = command_payload(command, doc, doc.systems[1]);
    }
    if (command == "plot") {
      const OrthantPolyhedron p = pair_polyhedron(doc.systems[0]);
      const bool drawable = p.dim() == 2;
      report["plotted"] = drawable;
      if (drawable) svg = polyhedron_svg(p);
    }
  }

  return CommandResult{report.dump(2) + "\n", std::move(svg)};
}

}  // namespace idexp
