#include "almostchar/json_io.hpp"

#include <limits>

#include "almostchar/error.hpp"

namespace almostchar {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw ResourceGuard("coefficient " + v.get_str() + " exceeds the JSON integer range");
  }
  return v.get_si();
}

Json parts_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

}  // namespace

Json to_json(const HalfLaurent& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms()) {
    Json t;
    t["halfexp"] = e;
    t["num"] = to_int64(c.get_num());
    t["den"] = to_int64(c.get_den());
    terms.push_back(std::move(t));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

HalfLaurent half_laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw InvalidInput("HalfLaurent JSON must be {\"terms\":[...]}");
  }
  std::vector<HalfLaurent::Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("halfexp") || !t.contains("num") || !t.contains("den")) {
      throw InvalidInput("HalfLaurent term needs halfexp, num and den");
    }
    const auto den = t["den"].get<std::int64_t>();
    if (den <= 0) throw InvalidInput("HalfLaurent denominators must be positive");
    Rational c(BigInt(std::to_string(t["num"].get<std::int64_t>())), BigInt(std::to_string(den)));
    c.canonicalize();
    terms.emplace_back(t["halfexp"].get<int>(), std::move(c));
  }
  return HalfLaurent::from_terms(std::move(terms));
}

Json to_json(const BiPartition& bp) { return Json::array({parts_json(bp.alpha), parts_json(bp.beta)}); }

BiPartition bipartition_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("bipartition must be [[alpha],[beta]]");
  return {partition_from_json(j[0]), partition_from_json(j[1])};
}

Json to_json(const Symbol& x) {
  Json out;
  out["S"] = x.row_s();
  out["T"] = x.row_t();
  return out;
}

Json to_json(const Family& family, Kind kind) {
  Json out;
  out["Z1"] = family.z1;
  out["Z2"] = family.z2;
  if (family.degenerate) out["degenerate"] = true;
  Json members = Json::array();
  for (const Symbol& x : family.members) {
    Json m;
    m["symbol"] = to_json(x);
    m["defect"] = x.defect();
    m["special"] = !family.degenerate && is_special(x, kind);
    members.push_back(std::move(m));
  }
  out["members"] = std::move(members);
  return out;
}

Json to_json(const VerificationReport& rep, bool timing) {
  Json out;
  out["claim"] = rep.claim;
  for (const auto& [k, v] : rep.params.items()) out[k] = v;
  out["value"] = to_json(rep.value);
  out["value_at_1"] = rational_string(rep.value.eval_one());
  out["verdict"] = verdict_name(rep.verdict);
  for (const auto& [k, v] : rep.details.items()) out[k] = v;
  if (timing) out["ms"] = rep.ms;
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

std::vector<int> parse_int_list(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("cannot parse '" + text + "' as a JSON integer list");
  }
  if (!j.is_array()) throw InvalidInput("expected a JSON list, got '" + text + "'");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidInput("expected integers in '" + text + "'");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace almostchar
