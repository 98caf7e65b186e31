#pragma once

#include <json.hpp>

#include "mseg/fiber.hpp"
#include "mseg/klyachko.hpp"
#include "mseg/partition.hpp"
#include "mseg/rep.hpp"
#include "mseg/segment.hpp"
#include "mseg/weil_deligne.hpp"

namespace mseg {

/// Version tag placed in every top-level CLI JSON report.
inline constexpr const char* kJsonSchema = "mseg/1";

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Composition& c);
nlohmann::json to_json(const CuspidalLine& line);
nlohmann::json to_json(const Multisegment& m);
nlohmann::json to_json(const Rep& r);
nlohmann::json to_json(const KlyachkoResult& k);
nlohmann::json to_json(const ExactMatrix& n);
nlohmann::json to_json(const FiberCount& c);
nlohmann::json to_json(const FiberElement& e);

Multisegment multisegment_from_json(const nlohmann::json& j);

}  // namespace mseg
