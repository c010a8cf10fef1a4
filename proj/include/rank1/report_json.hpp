#pragma once

#include <json.hpp>

#include "rank1/centralizer.hpp"
#include "rank1/language.hpp"
#include "rank1/phi.hpp"
#include "rank1/points.hpp"
#include "rank1/recognizer.hpp"
#include "rank1/tower.hpp"

namespace rank1::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "rank1/v1";

// A document with "schema" and "kind" first; fields follow in insertion order.
Json document(const char* kind);

Json to_json(const GapWitness& w);
Json to_json(const SpacerClassification& c);
Json to_json(const OccurrenceReport& r);
Json to_json(const ContextBound& b);
Json to_json(const LemmaCheckReport& r);
Json to_json(const PointLocation& l);
Json to_json(const InteriorMargins& m);
Json to_json(const ZWindow& w);
Json to_json(const GapFunction& g);
Json to_json(const ReturnWord& r);
Json to_json(const CongruenceReport& r);
Json to_json(const SeparationResult& r);
Json to_json(const BlockCode& c);
Json to_json(const PhiMatching& m);
Json to_json(const ProbeReport& r);

// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace rank1::report
