#include "cpindex/records.hpp"

namespace cpindex::records {

using nlohmann::json;

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) v.reset();
  else v = it->template get<T>();
}

}  // namespace

IndexRecord make_record(const fhindex::IndexComputation& c) {
  IndexRecord r;
  r.p = static_cast<int>(c.p);
  r.n = c.n;
  r.field = flagcoh::to_string(c.field);
  r.a = c.split.a;
  r.q = c.split.q;
  r.shape = fhindex::to_string(c.result.shape);
  r.l = c.result.l;
  r.ideal = c.result.render();
  r.generatorsUsed = static_cast<int>(c.generators_used);
  r.degreesScanned = c.degrees_scanned;
  r.elapsed = c.elapsed_seconds;
  return r;
}

VerificationRecord make_record(const fhindex::VerificationReport& rep) {
  VerificationRecord r;
  r.p = static_cast<int>(rep.p);
  r.n = rep.n;
  r.field = flagcoh::to_string(rep.field);
  r.a = rep.split.a;
  r.q = rep.split.q;
  for (const auto& c : rep.checks)
    r.checks.push_back({c.k, c.family, c.predicted, c.holds, c.lambda, c.alpha, c.alpha_zero_excluded, c.solutions});
  r.uRelation = rep.u_relation;
  r.vRelation = rep.v_relation;
  r.alpha0Relation = rep.alpha0_relation;
  r.passed = rep.passed();
  r.elapsed = rep.elapsed_seconds;
  return r;
}

ShadowRecord make_record(const fhindex::ShadowBound& b) {
  ShadowRecord r;
  r.p = static_cast<int>(b.p);
  r.n = b.n;
  r.field = flagcoh::to_string(b.field);
  r.a = b.split.a;
  r.q = b.split.q;
  r.maxR = b.max_r;
  r.flagIndex = fhindex::closed_form_index(b.p, b.n, b.field).render();
  r.admitsMaxR = fhindex::containment_admits(b.p, b.n, b.field, b.max_r);
  r.admitsMaxRPlusOne = fhindex::containment_admits(b.p, b.n, b.field, b.max_r + 1);
  r.justification = b.justification;
  return r;
}

void to_json(json& j, const IndexRecord& x) {
  j = json{{"p", x.p},         {"n", x.n},          {"field", x.field},
           {"a", x.a},         {"q", x.q},          {"shape", x.shape},
           {"l", x.l},         {"ideal", x.ideal},  {"generatorsUsed", x.generatorsUsed},
           {"degreesScanned", x.degreesScanned}, {"elapsed", x.elapsed}};
  put_optional(j, "closedShape", x.closedShape);
  put_optional(j, "closedL", x.closedL);
  put_optional(j, "match", x.match);
}

void from_json(const json& j, IndexRecord& x) {
  j.at("p").get_to(x.p);
  j.at("n").get_to(x.n);
  j.at("field").get_to(x.field);
  j.at("a").get_to(x.a);
  j.at("q").get_to(x.q);
  j.at("shape").get_to(x.shape);
  j.at("l").get_to(x.l);
  j.at("ideal").get_to(x.ideal);
  j.at("generatorsUsed").get_to(x.generatorsUsed);
  j.at("degreesScanned").get_to(x.degreesScanned);
  j.at("elapsed").get_to(x.elapsed);
  get_optional(j, "closedShape", x.closedShape);
  get_optional(j, "closedL", x.closedL);
  get_optional(j, "match", x.match);
}

void to_json(json& j, const SeriesRecord& x) {
  j = json{{"field", x.field}, {"j", x.j}, {"r", x.r}, {"p", x.p}, {"depth", x.depth},
           {"presentation", x.presentation}, {"series", x.series}, {"oddVanish", x.oddVanish},
           {"match", x.match}};
  put_optional(j, "fibration", x.fibration);
  put_optional(j, "fibrationError", x.fibrationError);
  put_optional(j, "gaussian", x.gaussian);
}

void from_json(const json& j, SeriesRecord& x) {
  j.at("field").get_to(x.field);
  j.at("j").get_to(x.j);
  j.at("r").get_to(x.r);
  j.at("p").get_to(x.p);
  j.at("depth").get_to(x.depth);
  j.at("presentation").get_to(x.presentation);
  j.at("series").get_to(x.series);
  j.at("oddVanish").get_to(x.oddVanish);
  j.at("match").get_to(x.match);
  get_optional(j, "fibration", x.fibration);
  get_optional(j, "fibrationError", x.fibrationError);
  get_optional(j, "gaussian", x.gaussian);
}

void to_json(json& j, const WreathClassEntry& x) {
  j = json{{"name", x.name}, {"degree", x.degree}, {"value", x.value}};
}

void from_json(const json& j, WreathClassEntry& x) {
  j.at("name").get_to(x.name);
  j.at("degree").get_to(x.degree);
  j.at("value").get_to(x.value);
}

void to_json(json& j, const WreathRecord& x) {
  j = json{{"p", x.p}, {"n", x.n}, {"field", x.field}, {"depth", x.depth}, {"classes", x.classes}};
}

void from_json(const json& j, WreathRecord& x) {
  j.at("p").get_to(x.p);
  j.at("n").get_to(x.n);
  j.at("field").get_to(x.field);
  j.at("depth").get_to(x.depth);
  j.at("classes").get_to(x.classes);
}

void to_json(json& j, const RelationEntry& x) {
  j = json{{"k", x.k},         {"family", x.family}, {"predicted", x.predicted},
           {"holds", x.holds}, {"lambda", x.lambda}, {"solutions", x.solutions}};
  put_optional(j, "alpha", x.alpha);
  put_optional(j, "alphaZeroExcluded", x.alphaZeroExcluded);
}

void from_json(const json& j, RelationEntry& x) {
  j.at("k").get_to(x.k);
  j.at("family").get_to(x.family);
  j.at("predicted").get_to(x.predicted);
  j.at("holds").get_to(x.holds);
  j.at("lambda").get_to(x.lambda);
  j.at("solutions").get_to(x.solutions);
  get_optional(j, "alpha", x.alpha);
  get_optional(j, "alphaZeroExcluded", x.alphaZeroExcluded);
}

void to_json(json& j, const VerificationRecord& x) {
  j = json{{"p", x.p},
           {"n", x.n},
           {"field", x.field},
           {"a", x.a},
           {"q", x.q},
           {"checks", x.checks},
           {"uRelation", x.uRelation},
           {"vRelation", x.vRelation},
           {"alpha0Relation", x.alpha0Relation},
           {"passed", x.passed},
           {"elapsed", x.elapsed}};
}

void from_json(const json& j, VerificationRecord& x) {
  j.at("p").get_to(x.p);
  j.at("n").get_to(x.n);
  j.at("field").get_to(x.field);
  j.at("a").get_to(x.a);
  j.at("q").get_to(x.q);
  j.at("checks").get_to(x.checks);
  j.at("uRelation").get_to(x.uRelation);
  j.at("vRelation").get_to(x.vRelation);
  j.at("alpha0Relation").get_to(x.alpha0Relation);
  j.at("passed").get_to(x.passed);
  j.at("elapsed").get_to(x.elapsed);
}

void to_json(json& j, const ShadowRecord& x) {
  j = json{{"p", x.p},
           {"n", x.n},
           {"field", x.field},
           {"a", x.a},
           {"q", x.q},
           {"maxR", x.maxR},
           {"flagIndex", x.flagIndex},
           {"admitsMaxR", x.admitsMaxR},
           {"admitsMaxRPlusOne", x.admitsMaxRPlusOne},
           {"justification", x.justification}};
}

void from_json(const json& j, ShadowRecord& x) {
  j.at("p").get_to(x.p);
  j.at("n").get_to(x.n);
  j.at("field").get_to(x.field);
  j.at("a").get_to(x.a);
  j.at("q").get_to(x.q);
  j.at("maxR").get_to(x.maxR);
  j.at("flagIndex").get_to(x.flagIndex);
  j.at("admitsMaxR").get_to(x.admitsMaxR);
  j.at("admitsMaxRPlusOne").get_to(x.admitsMaxRPlusOne);
  j.at("justification").get_to(x.justification);
}

void to_json(json& j, const CriterionRecord& x) {
  j = json{{"id", x.id}, {"name", x.name}, {"passed", x.passed}, {"detail", x.detail}, {"elapsed", x.elapsed}};
}

void from_json(const json& j, CriterionRecord& x) {
  j.at("id").get_to(x.id);
  j.at("name").get_to(x.name);
  j.at("passed").get_to(x.passed);
  j.at("detail").get_to(x.detail);
  j.at("elapsed").get_to(x.elapsed);
}

void to_json(json& j, const SelftestRecord& x) {
  j = json{{"criteria", x.criteria}, {"passed", x.passed}};
}

void from_json(const json& j, SelftestRecord& x) {
  j.at("criteria").get_to(x.criteria);
  j.at("passed").get_to(x.passed);
}

}  // namespace cpindex::records
