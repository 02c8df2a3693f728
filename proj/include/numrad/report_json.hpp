#pragma once

#include "numrad/bounds.hpp"
#include "numrad/commutator.hpp"
#include "numrad/diagnostics.hpp"
#include "numrad/support.hpp"

#include <json.hpp>

namespace numrad {

// JSON views of the report types. Keys appear in declaration order and
// doubles round-trip exactly, so identical inputs give identical bytes.
nlohmann::ordered_json to_json(const RadiusResult& r);
nlohmann::ordered_json to_json(const SupportProfile& p);
nlohmann::ordered_json to_json(const CrawfordResult& r);
nlohmann::ordered_json to_json(const DiskResult& r);
nlohmann::ordered_json to_json(const BoundsReport& r);
nlohmann::ordered_json to_json(const DiagnosticsReport& r);
nlohmann::ordered_json to_json(const NormAdditivityResult& r);
nlohmann::ordered_json to_json(const CircularDiskReport& r);
nlohmann::ordered_json to_json(const CommutatorReport& r);

} // namespace numrad
