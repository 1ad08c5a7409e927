#pragma once

#include <json.hpp>

#include "stanpart/depth.hpp"
#include "stanpart/hilbert.hpp"
#include "stanpart/partition.hpp"
#include "stanpart/polarize.hpp"
#include "stanpart/solver.hpp"

namespace stanpart {

using json = nlohmann::ordered_json;

json face_to_json(const Face& f);
Face face_from_json(const json& j);

json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const json& j);

json interval_to_json(const Interval& iv);
Interval interval_from_json(const json& j);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json series_to_json(const RationalSeries& s);
RationalSeries series_from_json(const json& j);

json depth_report_to_json(const DepthReport& r);
json verification_report_to_json(const VerificationReport& r);
json solver_result_to_json(const SolverResult& r, int depth, std::uint32_t field_char);
json transfer_certificate_to_json(const TransferCertificate& c);

}  // namespace stanpart
