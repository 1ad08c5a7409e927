#include "stanpart/json_io.hpp"

#include <stdexcept>

namespace stanpart {

json face_to_json(const Face& f) {
  json a = json::array();
  for (const auto& c : f.coords) {
    if (c.is_infinite())
      a.push_back("inf");
    else
      a.push_back(c.value());
  }
  return a;
}

Face face_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("face must be an array");
  Face f;
  for (const auto& c : j) {
    if (c.is_string()) {
      if (c.get<std::string>() != "inf")
        throw std::invalid_argument("face coordinate must be a natural or \"inf\"");
      f.coords.push_back(ExtNat::infinity());
    } else if (c.is_number_unsigned()) {
      f.coords.push_back(ExtNat(c.get<std::uint64_t>()));
    } else {
      throw std::invalid_argument("face coordinate must be a natural or \"inf\"");
    }
  }
  return f;
}

json ideal_to_json(const MonomialIdeal& I) {
  json j;
  j["vars"] = I.ring.var_names;
  json gens = json::array();
  for (const auto& g : I.gens) gens.push_back(g.exponents);
  j["gens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const json& j) {
  RingContext ring(j.at("vars").get<std::vector<std::string>>());
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    auto exps = g.get<std::vector<std::uint64_t>>();
    for (auto e : exps)
      if (e > kExponentCap) throw cap_exceeded("exponent exceeds cap");
    if (exps.size() != static_cast<std::size_t>(ring.n()))
      throw std::invalid_argument("generator arity does not match vars");
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::make(ring, gens);
}

json interval_to_json(const Interval& iv) {
  json j;
  j["lo"] = face_to_json(iv.lo);
  j["hi"] = face_to_json(iv.hi);
  return j;
}

Interval interval_from_json(const json& j) {
  return {face_from_json(j.at("lo")), face_from_json(j.at("hi"))};
}

json partition_to_json(const Partition& p) {
  json j;
  j["ideal"] = ideal_to_json(p.ideal);
  json ivs = json::array();
  for (const auto& iv : p.intervals) ivs.push_back(interval_to_json(iv));
  j["intervals"] = std::move(ivs);
  return j;
}

Partition partition_from_json(const json& j) {
  Partition p;
  p.ideal = ideal_from_json(j.at("ideal"));
  for (const auto& iv : j.at("intervals")) {
    auto parsed = interval_from_json(iv);
    if (parsed.lo.n() != p.ideal.ring.n())
      throw std::invalid_argument("interval arity does not match the ideal's ring");
    p.intervals.push_back(std::move(parsed));
  }
  return p;
}

json series_to_json(const RationalSeries& s) {
  json j;
  j["numerator"] = s.numerator;
  j["denom_power"] = s.denom_power;
  return j;
}

RationalSeries series_from_json(const json& j) {
  return {j.at("numerator").get<std::vector<long long>>(), j.at("denom_power").get<int>()};
}

json depth_report_to_json(const DepthReport& r) {
  json j;
  j["depth"] = r.depth;
  j["projective_dimension"] = r.projective_dimension;
  j["dim"] = r.dim;
  j["cohen_macaulay"] = r.cohen_macaulay;
  j["field_char"] = r.field_char;
  return j;
}

json verification_report_to_json(const VerificationReport& r) {
  json j;
  j["contained"] = r.contained;
  j["disjoint"] = r.disjoint;
  j["covers"] = r.covers;
  j["nice"] = r.nice;
  j["min_inf"] = r.min_inf;
  j["depth_used"] = r.depth_used;
  j["failures"] = r.failures;
  return j;
}

json solver_result_to_json(const SolverResult& r, int depth, std::uint32_t field_char) {
  json j;
  j["sdepth"] = r.sdepth;
  j["depth"] = depth;
  j["partition"] = partition_to_json(r.lifted);
  j["verified"] = true;
  j["field_char"] = field_char;
  j["exact"] = r.exact;
  return j;
}

json transfer_certificate_to_json(const TransferCertificate& c) {
  json j;
  j["ideal"] = ideal_to_json(c.ideal);
  j["polarized_ideal"] = ideal_to_json(c.polarized_ideal);
  j["n1"] = c.steps;
  j["input_partition"] = partition_to_json(c.input_partition);
  j["output_partition"] = partition_to_json(c.output_partition);
  j["input_depth"] = c.input_depth;
  j["output_depth"] = c.output_depth;
  j["verified"] = c.verified;
  return j;
}

}  // namespace stanpart
