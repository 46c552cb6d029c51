#pragma once

// Structured result records and their JSON form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpindex/fhindex.hpp"

namespace cpindex::records {

struct IndexRecord {
  int p = 3;
  int n = 1;
  std::string field;
  int a = 0;
  int q = 1;
  std::string shape;
  int l = 1;
  std::string ideal;
  int generatorsUsed = 0;
  int degreesScanned = 0;
  double elapsed = 0;
  std::optional<std::string> closedShape;
  std::optional<int> closedL;
  std::optional<bool> match;

  bool operator==(const IndexRecord&) const = default;
};

struct SeriesRecord {
  std::string field;
  int j = 1;
  int r = 1;
  int p = 3;
  int depth = 0;
  std::string presentation;  // galgebra text format
  std::vector<std::int64_t> series;
  std::optional<std::vector<std::int64_t>> fibration;
  std::optional<std::string> fibrationError;
  std::optional<std::vector<std::int64_t>> gaussian;
  bool oddVanish = true;
  bool match = false;

  bool operator==(const SeriesRecord&) const = default;
};

struct WreathClassEntry {
  std::string name;
  int degree = 0;
  std::string value;
  bool operator==(const WreathClassEntry&) const = default;
};

struct WreathRecord {
  int p = 3;
  int n = 1;
  std::string field;
  int depth = 0;
  std::vector<WreathClassEntry> classes;
  bool operator==(const WreathRecord&) const = default;
};

struct RelationEntry {
  int k = 0;
  std::string family;
  std::string predicted;
  bool holds = false;
  int lambda = 0;
  std::optional<int> alpha;
  std::optional<bool> alphaZeroExcluded;
  int solutions = 0;
  bool operator==(const RelationEntry&) const = default;
};

struct VerificationRecord {
  int p = 3;
  int n = 1;
  std::string field;
  int a = 0;
  int q = 1;
  std::vector<RelationEntry> checks;
  bool uRelation = false;
  bool vRelation = false;
  bool alpha0Relation = false;
  bool passed = false;
  double elapsed = 0;
  bool operator==(const VerificationRecord&) const = default;
};

struct ShadowRecord {
  int p = 3;
  int n = 1;
  std::string field;
  int a = 0;
  int q = 1;
  int maxR = 0;
  std::string flagIndex;
  bool admitsMaxR = false;
  bool admitsMaxRPlusOne = false;
  std::string justification;
  bool operator==(const ShadowRecord&) const = default;
};

struct CriterionRecord {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed = 0;
  bool operator==(const CriterionRecord&) const = default;
};

struct SelftestRecord {
  std::vector<CriterionRecord> criteria;
  bool passed = false;
  bool operator==(const SelftestRecord&) const = default;
};

IndexRecord make_record(const fhindex::IndexComputation& c);
VerificationRecord make_record(const fhindex::VerificationReport& r);
ShadowRecord make_record(const fhindex::ShadowBound& b);

void to_json(nlohmann::json& j, const IndexRecord& x);
void from_json(const nlohmann::json& j, IndexRecord& x);
void to_json(nlohmann::json& j, const SeriesRecord& x);
void from_json(const nlohmann::json& j, SeriesRecord& x);
void to_json(nlohmann::json& j, const WreathClassEntry& x);
void from_json(const nlohmann::json& j, WreathClassEntry& x);
void to_json(nlohmann::json& j, const WreathRecord& x);
void from_json(const nlohmann::json& j, WreathRecord& x);
void to_json(nlohmann::json& j, const RelationEntry& x);
void from_json(const nlohmann::json& j, RelationEntry& x);
void to_json(nlohmann::json& j, const VerificationRecord& x);
void from_json(const nlohmann::json& j, VerificationRecord& x);
void to_json(nlohmann::json& j, const ShadowRecord& x);
void from_json(const nlohmann::json& j, ShadowRecord& x);
void to_json(nlohmann::json& j, const CriterionRecord& x);
void from_json(const nlohmann::json& j, CriterionRecord& x);
void to_json(nlohmann::json& j, const SelftestRecord& x);
void from_json(const nlohmann::json& j, SelftestRecord& x);

template <class Record>
std::string render(const Record& r) {
  return nlohmann::json(r).dump(2);
}

template <class Record>
Record parse(std::string_view text) {
  return nlohmann::json::parse(text).get<Record>();
}

}  // namespace cpindex::records
