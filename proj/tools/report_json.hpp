#ifndef APOLAR_TOOLS_REPORT_JSON_HPP
#define APOLAR_TOOLS_REPORT_JSON_HPP

#include "apolar/bounds.hpp"
#include "apolar/formulas.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace apolar::cli {

using Json = nlohmann::ordered_json;

struct RunMeta {
    std::uint64_t seed = 0;
    std::string strategy;
};

// 64-bit FNV-1a of the signature and canonical polynomial text.
std::string input_hash(const MultiPoly& M);

Json report_json(const MultiPoly& M, const BoundReport& r, const RunMeta& meta);
std::string report_text(const MultiPoly& M, const BoundReport& r, const RunMeta& meta);

Json decomposition_json(const Decomposition& d);
Json decomposition_json(const CycloDecomposition& d);

}  // namespace apolar::cli

#endif
