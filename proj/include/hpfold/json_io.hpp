#pragma once

// JSON bindings for the documented schemas (see README, "File formats").

#include <json.hpp>

#include "hpfold/core.hpp"
#include "hpfold/families.hpp"
#include "hpfold/search.hpp"
#include "hpfold/survey.hpp"

namespace hpfold {

void to_json(nlohmann::json& j, const Chain& c);
void from_json(const nlohmann::json& j, Chain& c);

void to_json(nlohmann::json& j, const Folding& f);
void from_json(const nlohmann::json& j, Folding& f);

void to_json(nlohmann::json& j, const BondGraph& g);
void from_json(const nlohmann::json& j, BondGraph& g);

void to_json(nlohmann::json& j, const MissingBondEntry& e);
void from_json(const nlohmann::json& j, MissingBondEntry& e);
void to_json(nlohmann::json& j, const MissingBondReport& r);
void from_json(const nlohmann::json& j, MissingBondReport& r);

void to_json(nlohmann::json& j, const BondGraphShape& s);

void to_json(nlohmann::json& j, const SearchResult& r);
void from_json(const nlohmann::json& j, SearchResult& r);

void to_json(nlohmann::json& j, const SurveyRecord& r);
void from_json(const nlohmann::json& j, SurveyRecord& r);

void to_json(nlohmann::json& j, const LatticeTree& t);
void from_json(const nlohmann::json& j, LatticeTree& t);

}  // namespace hpfold
