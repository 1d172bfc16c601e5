#include "crossunion/json_io.hpp"

#include <ostream>

namespace crossunion {

namespace {

Json parameters_json(const InequalityRecord& r) {
  Json out = Json::object();
  for (const auto& [key, value] : r.parameters) out[key] = value;
  return out;
}

}  // namespace

Json sets_to_json(std::span<const SetMask> sets) {
  Json out = Json::array();
  for (SetMask s : sets) out.push_back(set_elements(s));
  return out;
}

Json to_json(const Family& f) {
  return Json{{"n", f.n()}, {"k", f.k()}, {"size", f.size()}, {"text", to_text(f)}};
}

Json to_json(const FamilyTuple& t) {
  Json fams = Json::array();
  for (const Family& f : t.families()) fams.push_back(to_json(f));
  return Json{{"n", t.n()}, {"k", t.k()}, {"s", t.s()}, {"total", t.total_size()}, {"families", fams}};
}

Json to_json(const InequalityRecord& r) {
  return Json{{"name", r.name},
              {"parameters", parameters_json(r)},
              {"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},
              {"relation", relation_symbol(r.relation)},
              {"holds", r.holds},
              {"strict", r.strict},
              {"applicable", r.applicable}};
}

Json to_json(const SlicesCheck& c) {
  return Json{{"record", to_json(c.record)},
              {"hypothesis", c.hypothesis},
              {"equality", c.equality},
              {"equality_expected", c.equality_expected},
              {"consistent", c.consistent}};
}

Json to_json(const Example13Report& r) {
  return Json{{"k", r.k},
              {"c", r.c},
              {"s", r.s},
              {"l", r.l},
              {"n", r.n},
              {"family1_size", to_string(r.family1_size)},
              {"sum", to_string(r.record.lhs)},
              {"star_value", to_string(r.record.rhs)},
              {"beats_star", r.record.holds},
              {"intro_condition", r.intro_condition},
              {"cross_union", r.cross_union},
              {"cross_union_method", r.exhaustive ? "exhaustive" : "structural"},
              {"record", to_json(r.record)}};
}

Json to_json(const GridSummary& g) {
  Json tallies = Json::object();
  for (const auto& [label, count] : g.tallies) tallies[label] = count;
  Json failures = Json::array();
  for (const auto& f : g.failures) failures.push_back(to_json(f));
  return Json{{"name", g.name},
              {"points", g.points},
              {"applicable", g.applicable},
              {"violations", g.violations},
              {"equality_mismatches", g.equality_mismatches},
              {"tallies", tallies},
              {"failures", failures}};
}

Json to_json(const SearchResult& r) {
  Json certs = Json::array();
  for (const auto& t : r.certificates) certs.push_back(to_json(t));
  Json stars = Json::array();
  for (const auto& t : r.star_certificates) stars.push_back(to_json(t));
  return Json{{"n", r.n},
              {"k", r.k},
              {"s", r.s},
              {"max_sum", r.max_sum},
              {"star_value", r.star_value},
              {"certificates", certs},
              {"star_certificates", stars},
              {"nodes_explored", r.nodes_explored},
              {"nodes_pruned", r.nodes_pruned},
              {"pruned",
               {{"circle", r.pruned_circle},
                {"rwise", r.pruned_rwise},
                {"g0_lower", r.pruned_g0_lower},
                {"capacity", r.pruned_capacity}}},
              {"bounds_used", r.bounds_used},
              {"passes", r.passes}};
}

Json to_json(const MainTheoremReport& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"s", r.s},
              {"l", r.l},
              {"max_sum", r.max_sum},
              {"star_value", r.star_value},
              {"value_matches", r.value_matches},
              {"unreduced", r.unreduced},
              {"maximizers_checked", r.maximizers_checked},
              {"all_maximizers_are_stars", r.all_maximizers_are_stars},
              {"holds", r.holds}};
}

Json to_json(const Question41Report& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"s", r.s},
              {"l", r.l},
              {"max_sum", r.max_sum},
              {"star_candidate", to_string(r.star_candidate)},
              {"example_candidate", to_string(r.example_candidate)},
              {"larger_candidate", to_string(r.larger_candidate)},
              {"equals_larger", r.equals_larger},
              {"exceeds_larger", r.exceeds_larger}};
}

Json to_json(const CircleReport& r) {
  return Json{{"lhs", to_string(r.lhs)}, {"s", r.s}, {"holds", r.holds}, {"tight", r.tight}};
}

Json to_json(const ShadowReport& r) {
  return Json{{"level", r.level},
              {"family_size", r.family_size},
              {"shadow_size", r.shadow_size},
              {"lovasz_x", r.lovasz_x},
              {"lovasz_bound", r.lovasz_bound},
              {"holds", r.holds}};
}

Json to_json(const ShiftTrace& t) {
  Json applied = Json::array();
  for (const auto& [i, j] : t.applied) applied.push_back(Json::array({i, j}));
  return Json{{"applied", applied}, {"rounds", t.rounds}};
}

void write_csv_header(std::ostream& out) { out << "name,parameters,lhs,rhs,holds,strict\n"; }

void write_csv_row(std::ostream& out, const InequalityRecord& r) {
  out << r.name << ',';
  bool first = true;
  for (const auto& [key, value] : r.parameters) {
    out << (first ? "" : ";") << key << '=' << value;
    first = false;
  }
  out << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << (r.holds ? "true" : "false")
      << ',' << (r.strict ? "true" : "false") << '\n';
}

}  // namespace crossunion
