#pragma once

// JSON / markdown / CSV rendering of the public result types.

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ulrich/classify.hpp"
#include "ulrich/enumerate.hpp"
#include "ulrich/verify.hpp"
#include "ulrich/weyl.hpp"

namespace ulrich {

nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const LineClass& l);
nlohmann::json to_json(const TwistedCubicClass& t);
nlohmann::json to_json(const ReductionTrace& trace);
nlohmann::json to_json(const UlrichReport& report);
nlohmann::json to_json(const TableRow& row);
nlohmann::json to_json(const VerificationCertificate& cert);
nlohmann::json to_json(const ThreefoldNumbers& n);

// columns: D, D2, decomposition, ulrich, stable, dim, polystable_dim,
// ss_simple_dim; absent values rendered as "-"
std::string table_to_markdown(const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);

std::string report_to_markdown(const UlrichReport& report);
std::string certificate_to_markdown(const VerificationCertificate& cert);

}  // namespace ulrich
