#pragma once

#include <string>

#include "algdyn/classify.hpp"
#include "algdyn/entropy.hpp"
#include "json.hpp"

namespace algdyn {

using Json = nlohmann::ordered_json;

/// Parses {"d", "m", "generators", "label"?}. Entries are integers or "p/q"
/// strings. Throws ParseError naming the source and the offending path.
SolenoidAction parse_action(const std::string& text, const std::string& source = "<input>");
SolenoidAction load_action(const std::string& path);

Json to_json(const Rat& q);
Json to_json(const RatPoly& p);
Json to_json(const QMatrix& m);
Json to_json(const QSubspace& s);
Json to_json(const Interval& x);
Json to_json(const IntVec& v);
Json to_json(const SolenoidAction& a);
Json to_json(const InvariantFlag& flag);
Json to_json(const NumberFieldAction& nf);
Json to_json(const WeightAnalysis& wa);
Json to_json(const HorosphericalReport& h);
Json to_json(const LogCombination& c);
Json to_json(const EntropyReport& r);
Json to_json(const KappaResult& k);
Json to_json(const LinearForm& lf);
Json to_json(const ShapeReport& r);
Json to_json(const TotalIrreducibility& t);
Json to_json(const VirtualCyclicity& v);
Json to_json(const FactorCheck& f);
Json to_json(const ComparisonReport& r);
Json to_json(const TorsionGroup& g);

}  // namespace algdyn
