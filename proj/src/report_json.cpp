#include "rank1/report_json.hpp"

namespace rank1::report {
namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json document(const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

Json to_json(const GapWitness& w) { return Json{{"n", w.n}, {"k", w.k}, {"r", w.r}, {"r_prime", w.r_prime}}; }

Json to_json(const SpacerClassification& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["depth"] = c.depth;
  j["period"] = opt(c.period);
  j["a_max"] = c.a_max;
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  j["growth_stages"] = c.growth_stages;
  j["max_runs"] = c.max_runs;
  return j;
}

Json to_json(const OccurrenceReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["all"] = r.all;
  j["expected"] = r.expected;
  j["unexpected"] = r.unexpected;
  return j;
}

Json to_json(const ContextBound& b) {
  Json j;
  j["n"] = b.n;
  j["l"] = b.l;
  j["bound"] = b.kind == BoundKind::PaperBound ? "witness" : "minimal";
  j[b.kind == BoundKind::PaperBound ? "witness_stage" : "horizon"] = b.witness_stage;
  return j;
}

Json to_json(const LemmaCheckReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["configurations"] = r.configurations;
  j["violations"] = r.violations;
  Json d = Json::array();
  for (const auto& v : r.details) d.push_back(Json{{"i", v.i}, {"j", v.j}, {"r", v.r}, {"s", v.s}});
  j["details"] = d;
  return j;
}

Json to_json(const PointLocation& l) {
  Json j;
  j["stage"] = l.stage;
  j["spacer"] = l.is_spacer();
  j["level"] = opt(l.level);
  return j;
}

Json to_json(const InteriorMargins& m) {
  Json j;
  j["down"] = m.at_depth.down;
  j["up"] = m.at_depth.up;
  Json per = Json::array();
  for (std::size_t n = 0; n < m.per_stage.size(); ++n) {
    const auto& s = m.per_stage[n];
    per.push_back(s ? Json{{"stage", n}, {"down", s->down}, {"up", s->up}}
                    : Json{{"stage", n}, {"spacer", true}});
  }
  j["per_stage"] = per;
  return j;
}

Json to_json(const ZWindow& w) {
  Json j;
  j["address"] = format_address(w.address);
  j["before"] = w.before;
  j["after"] = w.after;
  j["returns"] = w.returns;
  return j;
}

Json to_json(const GapFunction& g) {
  Json j = Json::array();
  for (std::size_t k = 0; k < g.domain.size(); ++k) j.push_back(Json{{"i", g.domain[k]}, {"psi", g.values[k]}});
  return j;
}

Json to_json(const ReturnWord& r) { return Json{{"stage", r.stage}, {"count", r.count}, {"gaps", r.gaps}}; }

Json to_json(const CongruenceReport& r) {
  Json j;
  j["stage"] = r.stage;
  j["modulus"] = r.modulus;
  j["anchor"] = r.anchor;
  j["return_count"] = r.return_count;
  j["constant_classes"] = r.constant_classes;
  j["varying_classes"] = r.varying_classes;
  j["claim_asserted"] = r.claim_asserted;
  j["claim_holds"] = r.claim_holds;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back(Json{{"residue", c.residue}, {"constant", c.constant}, {"values", c.values}});
  }
  j["classes"] = classes;
  Json stages = Json::array();
  for (const auto& [k, st] : r.constant_class_stage) stages.push_back(Json{{"index", k}, {"stage", opt(st)}});
  j["constant_class_stage"] = stages;
  return j;
}

Json to_json(const SeparationResult& r) {
  Json j;
  j["separating_level"] =
      r.separating_level ? Json{{"stage", r.separating_level->first}, {"level", r.separating_level->second}}
                         : Json(nullptr);
  j["radius"] = r.radius;
  j["windows_differ"] = r.windows_differ;
  return j;
}

Json to_json(const BlockCode& c) {
  Json j;
  j["radius"] = c.radius();
  Json table;
  for (std::size_t i = 0; i < c.domain().size(); ++i) table[c.domain()[i]] = std::string(1, c.outputs()[i]);
  j["table"] = table;
  return j;
}

Json to_json(const PhiMatching& m) {
  Json j;
  j["stage"] = m.stage;
  j["pre_shift"] = m.pre_shift;
  j["h"] = m.h;
  j["zx"] = m.zx;
  j["zgx"] = m.zgx;
  Json pairs = Json::array();
  for (const auto& p : m.pairs) pairs.push_back(Json::array({p.i, p.phi}));
  j["pairs"] = pairs;
  j["offsets"] = m.offsets;
  j["recovered_offset"] = opt(m.recovered_offset);
  return j;
}

Json to_json(const ProbeReport& r) {
  Json j;
  j["schedule"] = r.schedule;
  j["radius"] = r.radius;
  j["test_len"] = r.test_len;
  j["inverse_radius"] = r.inverse_radius;
  j["in_theorem_scope"] = r.in_theorem_scope;
  j["language_stage"] = r.language_stage;
  j["offset_stage"] = r.offset_stage;
  j["table_slots"] = r.table_slots;
  j["codes_examined"] = r.codes_examined;
  j["language_preserving"] = r.language_preserving;
  j["invertible"] = r.invertible;
  j["exotic_count"] = r.exotic_count;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["outputs"] = e.code.outputs();
    x["match"] = e.shift ? Json(*e.shift) : Json("EXOTIC");
    x["inverse_radius"] = e.inverse.radius();
    x["recovered_offset"] = opt(e.recovered_offset);
    if (!e.recovered_offset && !e.offset_note.empty()) x["note"] = e.offset_note;
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rank1::report
