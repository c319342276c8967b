#pragma once

#include <string>

#include <json.hpp>

#include "paralab/corpus.hpp"
#include "paralab/kernel.hpp"
#include "paralab/semantics.hpp"
#include "paralab/syntax.hpp"

namespace paralab::report {

using Json = nlohmann::ordered_json;

// Machine output is stable across runs: fixed key order, registry-ordered
// rule lists, no timestamps.

Json profileJson(const Profile& profile);
Json usageJson(const UsageReport& usage);
Json checkJson(const ProofScript& proof, const CheckResult& result);
Json matrixJson(const MatrixReport& matrix);
MatrixReport matrixFromJson(const Json& j);  // throws Error on malformed input

Json valuationJson(const Valuation& v);

std::string sequentText(const Sequent& sequent);
std::string valuationText(const Valuation& v);  // "A=b, B=f"

std::string checkText(const ProofScript& proof, const CheckResult& result,
                      const Profile& profile);
std::string usageText(const std::string& proofName, const UsageReport& usage);
std::string matrixText(const MatrixReport& matrix);

}  // namespace paralab::report
