#pragma once

#include <json.hpp>

#include "g2cl/classgroup.hpp"
#include "g2cl/elliptic.hpp"
#include "g2cl/hlp.hpp"
#include "g2cl/search.hpp"

namespace g2cl {

using json = nlohmann::json;

// Rationals serialize as "num/den" strings (den omitted when 1),
// polynomials as arrays of rational strings, constant term first, curves
// as the 5-tuple [a1, a2, a3, a4, a6].

json to_json(const Rat& q);
json to_json(const RatPoly& p);
json to_json(const EllipticCurve& e);
json to_json(const VerifyFlags& f);
json to_json(const HLPCurveRecord& rec);
json to_json(const IgusaClass& ic);
json to_json(const CurveResult& cr);
json to_json(const ConventionCounts& c);
json to_json(const SearchReport& rep);
json to_json(const ClassGroupReport& rep);
json to_json(const QuadForm& f);
json to_json(const HarvestRecord& rec);

RatPoly poly_from_json(const json& j);

// FNV-1a over the raw bytes of a file, hex encoded; used for run manifests.
std::string file_hash(const std::string& path);

}  // namespace g2cl
