#include "idexp/blowup.hpp"

#include <algorithm>
#include <sstream>

namespace idexp {

using boost::multiprecision::numerator;

namespace {

std::vector<int> center_indices(const VarSplit& split, const BlowupStep& step) {
  if (step.center.empty()) throw input_error("blow-up center is empty");
  std::vector<int> idxs;
  for (const auto& name : step.center) {
    auto i = split.index_of(name);
    if (!i) throw input_error("blow-up center names unknown variable '" + name + "'");
    idxs.push_back(*i);
  }
  std::sort(idxs.begin(), idxs.end());
  if (std::adjacent_find(idxs.begin(), idxs.end()) != idxs.end())
    throw input_error("blow-up center repeats a variable");
  if (!split.index_of(step.chart) ||
      std::find(step.center.begin(), step.center.end(), step.chart) == step.center.end())
    throw input_error("blow-up chart must be one of the center variables");
  return idxs;
}

std::string describe(const ScriptStep& step) {
  std::ostringstream os;
  if (std::holds_alternative<AdjoinStep>(step)) {
    os << "adjoin " << std::get<AdjoinStep>(step).name;
  } else {
    const auto& b = std::get<BlowupStep>(step);
    os << "blowup (";
    for (size_t i = 0; i < b.center.size(); ++i) {
      if (i) os << ",";
      os << b.center[i];
    }
    os << ") chart " << b.chart;
  }
  return os.str();
}

}  // namespace

TransformResult transform_blowup(const Pair& p, const BlowupStep& step) {
  std::vector<int> idxs = center_indices(*p.split, step);
  ExtRat along = ExtRat::inf();
  for (const auto& g : p.gens) along = min(along, g.order_along(idxs));
  if (along < ExtRat::of(p.b)) return {false, std::nullopt};

  Pair q = cleared(p);
  int b_int = static_cast<int>(numerator(q.b));
  int chart = *q.split->index_of(step.chart);
  std::map<int, Poly> images;
  Poly chart_var = Poly::variable(q.field, q.split, chart);
  for (int i : idxs) {
    if (i == chart) continue;
    images.emplace(i, chart_var * Poly::variable(q.field, q.split, i));
  }
  std::vector<Poly> gens;
  for (const auto& g : q.gens) {
    Poly sub = g.substitute(images);
    auto divided = sub.divide_by_variable_power(chart, b_int);
    if (!divided)
      throw precondition_error("exceptional division failed on a permissible chart");
    gens.push_back(std::move(*divided));
  }
  return {true, Pair(q.field, q.split, std::move(gens), q.b)};
}

LsbTrace run_lsb(const PairSystem& s, const LSBScript& script) {
  PairSystem cur = s;
  LsbTrace trace{cur, {}, 0, true};
  int index = 0;
  for (const auto& step : script.steps) {
    LsbStepRecord rec{index, describe(step), {}, false};
    if (std::holds_alternative<AdjoinStep>(step)) {
      const auto& adj = std::get<AdjoinStep>(step);
      VarSplitPtr wider = cur.split->adjoined(adj.name);
      std::vector<Pair> comps;
      for (const auto& c : cur.components) {
        std::vector<Poly> gens;
        for (const auto& g : c.gens) gens.push_back(g.lifted(wider));
        comps.emplace_back(c.field, wider, std::move(gens), c.b);
        rec.permissible.push_back(true);
      }
      cur = PairSystem(cur.field, wider, std::move(comps));
      rec.executed = true;
    } else {
      const auto& blow = std::get<BlowupStep>(step);
      std::vector<TransformResult> results;
      bool all = true;
      for (const auto& c : cur.components) {
        results.push_back(transform_blowup(c, blow));
        rec.permissible.push_back(results.back().permissible);
        all = all && results.back().permissible;
      }
      if (all) {
        std::vector<Pair> comps;
        for (auto& r : results) comps.push_back(std::move(*r.image));
        cur = PairSystem(cur.field, cur.split, std::move(comps));
        rec.executed = true;
      } else {
        trace.steps.push_back(std::move(rec));
        trace.stop_index = index;
        trace.completed = false;
        trace.final_system = cur;
        return trace;
      }
    }
    trace.steps.push_back(std::move(rec));
    ++index;
  }
  trace.stop_index = index;
  trace.final_system = cur;
  return trace;
}

LSBScript s_alpha_beta(const VarSplit& split, int alpha, int beta, const std::string& tname) {
  if (alpha < 0 || beta < 0) throw input_error("blow-up counts must be nonnegative");
  if (split.index_of(tname)) throw input_error("adjoined variable already exists: " + tname);
  LSBScript script;
  script.steps.push_back(AdjoinStep{tname});
  std::vector<std::string> center_all = split.names();
  center_all.push_back(tname);
  for (int i = 0; i < alpha; ++i) script.steps.push_back(BlowupStep{center_all, tname});
  for (int i = 0; i < beta; ++i) script.steps.push_back(BlowupStep{{tname}, tname});
  return script;
}

std::string fresh_name(const VarSplit& split, const std::string& base) {
  if (!split.index_of(base)) return base;
  for (int k = 2;; ++k) {
    std::string name = base + std::to_string(k);
    if (!split.index_of(name)) return name;
  }
}

namespace {

struct ProbeSearch {
  int depth;
  long budget;
  long examined = 0;
  std::optional<std::pair<std::vector<BlowupStep>, int>> witness;

  bool all_permissible(const PairSystem& s, const BlowupStep& step) {
    for (const auto& c : s.components) {
      std::vector<int> idxs = center_indices(*s.split, step);
      ExtRat along = ExtRat::inf();
      for (const auto& g : c.gens) along = min(along, g.order_along(idxs));
      if (along < ExtRat::of(c.b)) return false;
    }
    return true;
  }

  PairSystem transformed(const PairSystem& s, const BlowupStep& step) {
    std::vector<Pair> comps;
    for (const auto& c : s.components) comps.push_back(std::move(*transform_blowup(c, step).image));
    return PairSystem(s.field, s.split, std::move(comps));
  }

  // Candidate steps: coordinate subsets (larger centers first), charts in
  // variable order. Deterministic.
  std::vector<BlowupStep> candidates(const VarSplit& split) {
    const int n = split.size();
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << n); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      return __builtin_popcount(a) > __builtin_popcount(b);
    });
    std::vector<BlowupStep> out;
    for (unsigned mask : masks) {
      std::vector<std::string> center;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) center.push_back(split.name(i));
      }
      for (const auto& chart : center) out.push_back(BlowupStep{center, chart});
    }
    return out;
  }

  bool dfs(const PairSystem& a, const PairSystem& b, std::vector<BlowupStep>& path) {
    if (static_cast<int>(path.size()) >= depth) return false;
    for (const auto& step : candidates(*a.split)) {
      if (++examined > budget) return false;
      bool pa = all_permissible(a, step);
      bool pb = all_permissible(b, step);
      if (pa != pb) {
        path.push_back(step);
        witness = {path, pa ? 0 : 1};
        return true;
      }
      if (pa && pb && static_cast<int>(path.size()) + 1 < depth) {
        path.push_back(step);
        if (dfs(transformed(a, step), transformed(b, step), path)) return true;
        path.pop_back();
      }
    }
    return false;
  }
};

PairSystem with_adjoined(const PairSystem& s, const std::vector<std::string>& names) {
  PairSystem cur = s;
  for (const auto& n : names) {
    LSBScript one;
    one.steps.push_back(AdjoinStep{n});
    cur = run_lsb(cur, one).final_system;
  }
  return cur;
}

}  // namespace

ProbeResult probe_equiv(const PairSystem& a, const PairSystem& b, int depth, int extensions) {
  if (!compatible(a.split, b.split))
    throw input_error("equivalence probe needs both systems over the same variables");
  if (depth < 1) throw input_error("probe depth must be at least 1");
  if (extensions < 0) throw input_error("probe extension count must be nonnegative");
  ProbeResult result;

  // Order-gap guided family: when the origin orders differ, the adjoin +
  // alpha-fold origin + beta-fold divisorial script separates the pairs with
  // alpha = b1*b2 (cleared weights) and beta = (larger order - 1) * alpha.
  if (a.components.size() == 1 && b.components.size() == 1) {
    ExtRat o1 = ord_origin_pair(a.components[0]);
    ExtRat o2 = ord_origin_pair(b.components[0]);
    if (o1.is_finite() && o2.is_finite() && o1 != o2) {
      Rat b1 = cleared(a.components[0]).b;
      Rat b2 = cleared(b.components[0]).b;
      Rat alpha_r = b1 * b2;
      Rat omax = std::max(o1.value, o2.value);
      Rat beta_r = (omax - 1) * alpha_r;
      if (boost::multiprecision::denominator(alpha_r) == 1 &&
          boost::multiprecision::denominator(beta_r) == 1 && beta_r >= 1 && alpha_r <= 64) {
        LSBScript script = s_alpha_beta(*a.split, static_cast<int>(numerator(alpha_r)),
                                        static_cast<int>(numerator(beta_r)),
                                        fresh_name(*a.split, "t"));
        LsbTrace ta = run_lsb(a, script);
        LsbTrace tb = run_lsb(b, script);
        result.scripts_examined += 1;
        if (ta.completed != tb.completed) {
          result.witness_found = true;
          result.permissible_for = ta.completed ? 0 : 1;
          result.script = script;
          result.notes.push_back("order-gap script");
          return result;
        }
      }
    }
  }

  for (int ext = 0; ext <= extensions; ++ext) {
    std::vector<std::string> adjoined;
    {
      VarSplitPtr split = a.split;
      for (int k = 0; k < ext; ++k) {
        std::string n = fresh_name(*split, "t");
        adjoined.push_back(n);
        split = split->adjoined(n);
      }
    }
    PairSystem sa = with_adjoined(a, adjoined);
    PairSystem sb = with_adjoined(b, adjoined);
    ProbeSearch search{depth, 2000000};
    std::vector<BlowupStep> path;
    search.dfs(sa, sb, path);
    result.scripts_examined += search.examined;
    if (search.witness) {
      result.witness_found = true;
      result.permissible_for = search.witness->second;
      for (const auto& n : adjoined) result.script.steps.push_back(AdjoinStep{n});
      for (const auto& step : search.witness->first) result.script.steps.push_back(step);
      return result;
    }
    if (search.examined > search.budget)
      result.notes.push_back("search budget exhausted at " + std::to_string(ext) + " extensions");
  }
  result.notes.push_back("no witness found within depth " + std::to_string(depth) + " and " +
                         std::to_string(extensions) + " extensions");
  return result;
}

}  // namespace idexp
