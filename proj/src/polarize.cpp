#include "stanpart/polarize.hpp"

#include <algorithm>
#include <stdexcept>

#include "stanpart/errors.hpp"

namespace stanpart {

PolarizationMap PolarizationMap::make(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("polarization of the zero ideal");
  PolarizationMap pm;
  pm.source = I.ring;
  pm.block_sizes = I.max_exponents();
  std::vector<std::string> names;
  for (int i = 0; i < I.ring.n(); ++i) {
    auto& r = pm.block_sizes[static_cast<std::size_t>(i)];
    r = std::max<std::uint64_t>(r, 1);
    for (std::uint64_t j = 1; j <= r; ++j)
      names.push_back(I.ring.var_names[static_cast<std::size_t>(i)] + "_" + std::to_string(j));
  }
  pm.target = RingContext(std::move(names));
  pm.steps = pm.target.n() - I.ring.n();
  return pm;
}

int PolarizationMap::block_start(int i) const {
  int off = 0;
  for (int k = 0; k < i; ++k) off += static_cast<int>(block_sizes[static_cast<std::size_t>(k)]);
  return off;
}

Monomial polarize_monomial(const Monomial& u, const PolarizationMap& pm) {
  if (u.n() != pm.source.n()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::uint64_t> e(static_cast<std::size_t>(pm.target_n()), 0);
  int off = 0;
  for (int i = 0; i < u.n(); ++i) {
    const std::uint64_t r = pm.block_sizes[static_cast<std::size_t>(i)];
    if (u[i] > r)
      throw std::invalid_argument("exponent exceeds polarization block at variable " +
                                  pm.source.var_names[static_cast<std::size_t>(i)]);
    for (std::uint64_t j = 0; j < u[i]; ++j) e[static_cast<std::size_t>(off) + j] = 1;
    off += static_cast<int>(r);
  }
  return Monomial(std::move(e));
}

std::pair<MonomialIdeal, PolarizationMap> polarize_ideal(const MonomialIdeal& I) {
  const auto pm = PolarizationMap::make(I);
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back(polarize_monomial(g, pm));
  auto Ip = MonomialIdeal::make(pm.target, gens);
  if (Ip.gens.size() != I.gens.size())
    throw std::logic_error("polarization must preserve the minimal generator count");
  return {std::move(Ip), pm};
}

Face polarize_top_face(const Face& b, const PolarizationMap& pm) {
  if (b.n() != pm.source.n()) throw std::invalid_argument("dimension mismatch");
  Face out;
  out.coords.assign(static_cast<std::size_t>(pm.target_n()), ExtNat::infinity());
  int off = 0;
  for (int i = 0; i < b.n(); ++i) {
    const std::uint64_t r = pm.block_sizes[static_cast<std::size_t>(i)];
    if (b[i].is_finite()) {
      if (b[i].value() >= r)
        throw std::invalid_argument("face coordinate " + b[i].str() +
                                    " not below block size " + std::to_string(r));
      out.coords[static_cast<std::size_t>(off) + b[i].value()] = ExtNat(0);
    }
    off += static_cast<int>(r);
  }
  return out;
}

Face polarize_finite_face(const Face& a, const PolarizationMap& pm) {
  if (a.n() != pm.source.n()) throw std::invalid_argument("dimension mismatch");
  Face out;
  out.coords.assign(static_cast<std::size_t>(pm.target_n()), ExtNat(0));
  int off = 0;
  for (int i = 0; i < a.n(); ++i) {
    const std::uint64_t r = pm.block_sizes[static_cast<std::size_t>(i)];
    if (a[i].is_infinite() || a[i].value() > r)
      throw std::invalid_argument("face coordinate " + a[i].str() +
                                  " outside polarization domain (block size " +
                                  std::to_string(r) + ")");
    for (std::uint64_t j = 0; j < a[i].value(); ++j)
      out.coords[static_cast<std::size_t>(off) + j] = ExtNat(1);
    off += static_cast<int>(r);
  }
  return out;
}

bool check_facet_bijection(const MonomialIdeal& I, std::uint64_t candidate_cap) {
  auto [Ip, pm] = polarize_ideal(I);
  const auto source_facets = facets(I, candidate_cap);
  auto target_facets = facets(Ip, candidate_cap);

  std::vector<Face> image;
  image.reserve(source_facets.size());
  for (const auto& f : source_facets) image.push_back(polarize_top_face(f, pm));
  std::sort(image.begin(), image.end(), face_lex_less);
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  return image == target_facets;
}

bool polarization_identity_check(const MonomialIdeal& I) {
  auto [Ip, pm] = polarize_ideal(I);
  return polarization_identity_holds(hilbert_series(Ip), hilbert_series(I), pm.steps);
}

TransferCertificate polarize_partition(const Partition& p, const FieldSpec& field) {
  TransferCertificate cert;
  cert.ideal = p.ideal;
  cert.field_char = field.p;
  cert.input_partition = p;

  const auto input_depth = depth_report(p.ideal, field);
  cert.input_depth = input_depth.depth;
  const auto input_report = verify(p, static_cast<std::uint64_t>(input_depth.depth));
  if (!input_report.all_good())
    throw std::invalid_argument("input partition does not verify");

  const auto facet_list = facets(p.ideal);
  std::vector<Face> tops;
  for (const auto& iv : p.intervals) tops.push_back(iv.hi);
  std::sort(tops.begin(), tops.end(), face_lex_less);
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
  if (tops != facet_list)
    throw std::invalid_argument("tops must be exactly the facets; refine the partition first");

  auto [Ip, pm] = polarize_ideal(p.ideal);
  cert.polarized_ideal = Ip;
  cert.steps = pm.steps;

  cert.output_partition.ideal = Ip;
  for (const auto& iv : p.intervals)
    cert.output_partition.intervals.emplace_back(polarize_finite_face(iv.lo, pm),
                                                 polarize_top_face(iv.hi, pm));

  const auto output_depth = depth_report(Ip, field);
  cert.output_depth = output_depth.depth;
  const auto output_report =
      verify(cert.output_partition, static_cast<std::uint64_t>(output_depth.depth));
  if (!output_report.all_good() || !output_report.nice)
    throw std::logic_error("polarized partition failed certification: " +
                           (output_report.failures.empty() ? std::string("unknown")
                                                           : output_report.failures.front()));
  cert.verified = true;
  return cert;
}

}  // namespace stanpart
