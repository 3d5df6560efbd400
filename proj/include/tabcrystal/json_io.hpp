#pragma once

#include <json.hpp>

#include "tabcrystal/branching.hpp"
#include "tabcrystal/crystal.hpp"
#include "tabcrystal/qpoly.hpp"
#include "tabcrystal/report.hpp"
#include "tabcrystal/rsk.hpp"
#include "tabcrystal/sieving.hpp"
#include "tabcrystal/tableau.hpp"

namespace tabcrystal {

using json = nlohmann::ordered_json;

// Partitions are plain integer arrays.
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

// {"shape":[...], "inner":[...], "rows":[[...], ...]}; skew rows list only
// the cells outside the inner shape.
void to_json(json& j, const Tableau& t);
void from_json(const json& j, Tableau& t);

// {"coeffs": {"<exponent>": coefficient, ...}}
void to_json(json& j, const LaurentPoly& p);
void from_json(const json& j, LaurentPoly& p);

void to_json(json& j, const Permutation& w);

/// "pass" or the first counterexample.
json verdict_json(const VerificationReport& r);
void to_json(json& j, const VerificationReport& r);

void to_json(json& j, const CrystalGraph& g);
void to_json(json& j, const CspReport& r);
void to_json(json& j, const StembridgeReport& r);
void to_json(json& j, const BranchingReport& r);
void to_json(json& j, const SignReport& r);
void to_json(json& j, const CellReport& r);

}  // namespace tabcrystal
