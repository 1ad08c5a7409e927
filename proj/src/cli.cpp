#include "stanpart/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "stanpart/corpus.hpp"
#include "stanpart/errors.hpp"
#include "stanpart/json_io.hpp"
#include "stanpart/parse.hpp"

namespace stanpart {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

FieldSpec parse_field(const std::string& spec) {
  if (spec == "q") return {};
  if (spec.rfind("fp:", 0) == 0) {
    const unsigned long p = std::stoul(spec.substr(3));
    if (p < 2 || p > (1ul << 30)) throw CLI::ValidationError("--field", "prime out of range");
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw CLI::ValidationError("--field", std::to_string(p) + " is not prime");
    return {static_cast<std::uint32_t>(p)};
  }
  throw CLI::ValidationError("--field", "expected q or fp:<p>");
}

struct IdealInput {
  std::string expr;
  std::string file;

  MonomialIdeal load() const {
    if (!expr.empty() && !file.empty())
      throw CLI::ValidationError("ideal", "give an inline ideal or --file, not both");
    if (!expr.empty()) return parse_ideal_expr(expr);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      return ideal_from_json(json::parse(in));
    }
    throw CLI::ValidationError("ideal", "an ideal is required (inline or --file)");
  }
};

void add_ideal_options(CLI::App* cmd, IdealInput& input) {
  cmd->add_option("ideal", input.expr, "inline generators, e.g. \"x1^2, x1*x2, x3^2\"");
  cmd->add_option("--file", input.file, "path to an ideal JSON document");
}

void print_faces(std::ostream& out, const std::vector<Face>& faces) {
  for (const auto& f : faces) out << f.str() << "\n";
}

void print_partition(std::ostream& out, const Partition& p) {
  for (const auto& iv : p.intervals) out << iv.str() << "\n";
}

json faces_json(const std::vector<Face>& faces) {
  json a = json::array();
  for (const auto& f : faces) a.push_back(face_to_json(f));
  return a;
}

// Full pipeline: nice partition, refinement to facet tops, polarization.
// Throws invalid_argument with a reason when the transfer is unreachable.
TransferCertificate run_transfer(const MonomialIdeal& I, const FieldSpec& field,
                                 const SolverOptions& sopts) {
  const auto nice = nice_partition(I, field, sopts);
  if (!nice.partition)
    throw std::invalid_argument("no nice partition available: " + nice.finding);
  const auto facet_list = facets(I);
  for (const auto& iv : nice.partition->intervals)
    if (std::find(facet_list.begin(), facet_list.end(), iv.hi) == facet_list.end())
      throw std::invalid_argument("nice witness has a non-facet top " + iv.hi.str() +
                                  "; transfer needs facet tops");
  const auto refined = refine_to_facets(*nice.partition, facet_list);
  return polarize_partition(refined, field);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact multicomplex, Stanley depth and polarization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_spec = "q";
  bool as_json = false;
  app.add_option("--field", field_spec, "coefficient field: q or fp:<p>")->capture_default_str();
  app.add_flag("--json", as_json, "emit JSON instead of tables");

  SolverOptions sopts;
  app.add_option("--cap-nodes", sopts.node_cap, "solver search node cap");
  app.add_option("--g-bump", sopts.max_bound_bumps, "extra bound retries for the lift");

  IdealInput decompose_in, facets_in, depth_in, sdepth_in, hilbert_in, polarize_in,
      partition_in, transfer_in;

  auto* cmd_decompose = app.add_subcommand("decompose", "irreducible decomposition");
  add_ideal_options(cmd_decompose, decompose_in);
  auto* cmd_facets = app.add_subcommand("facets", "maximal faces and facets");
  add_ideal_options(cmd_facets, facets_in);
  auto* cmd_depth = app.add_subcommand("depth", "depth, dimension, Cohen-Macaulayness");
  add_ideal_options(cmd_depth, depth_in);
  auto* cmd_sdepth = app.add_subcommand("sdepth", "Stanley depth with verified witness");
  add_ideal_options(cmd_sdepth, sdepth_in);
  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient");
  add_ideal_options(cmd_hilbert, hilbert_in);
  auto* cmd_polarize = app.add_subcommand("polarize", "polarized ideal");
  add_ideal_options(cmd_polarize, polarize_in);
  auto* cmd_partition = app.add_subcommand("partition", "nice partition if one is found");
  add_ideal_options(cmd_partition, partition_in);
  auto* cmd_transfer =
      app.add_subcommand("transfer", "polarization transfer certificate for a nice partition");
  add_ideal_options(cmd_transfer, transfer_in);

  auto* cmd_verify = app.add_subcommand("verify", "certify a partition from JSON");
  std::string verify_file;
  std::int64_t verify_depth = -1;
  cmd_verify->add_option("--partition", verify_file, "partition JSON document")->required();
  cmd_verify->add_option("--depth", verify_depth,
                         "depth to check niceness against (default: computed)");

  auto* cmd_corpus = app.add_subcommand("corpus", "seeded random ideals with a solver report");
  CorpusOptions copts;
  cmd_corpus->add_option("--seed", copts.seed, "random seed")->capture_default_str();
  cmd_corpus->add_option("--count", copts.count, "number of ideals")->capture_default_str();
  cmd_corpus->add_option("--max-n", copts.max_n, "max variable count")->capture_default_str();
  cmd_corpus->add_option("--max-exp", copts.max_exp, "max exponent")->capture_default_str();
  cmd_corpus->add_option("--max-gens", copts.max_gens, "max generators")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("stanpart");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const FieldSpec field = parse_field(field_spec);

    if (*cmd_decompose) {
      const auto I = decompose_in.load();
      const auto comps = irreducible_decomposition(I);
      if (as_json) {
        json a = json::array();
        for (const auto& c : comps) a.push_back(ideal_to_json(c.to_ideal(I.ring)));
        out << json{{"components", a}}.dump(2) << "\n";
      } else {
        for (const auto& c : comps) out << ideal_str(c.to_ideal(I.ring)) << "\n";
      }
      return kExitOk;
    }

    if (*cmd_facets) {
      const auto view = MulticomplexView::build(facets_in.load());
      if (as_json) {
        out << json{{"vars", view.ideal.ring.var_names},
                    {"maximal_faces", faces_json(view.maximal)},
                    {"facets", faces_json(view.facet_list)}}
                   .dump(2)
            << "\n";
      } else {
        print_faces(out, view.facet_list);
      }
      return kExitOk;
    }

    if (*cmd_depth) {
      const auto rep = depth_report(depth_in.load(), field);
      if (as_json) {
        out << depth_report_to_json(rep).dump(2) << "\n";
      } else {
        out << "depth: " << rep.depth << "\n"
            << "projective_dimension: " << rep.projective_dimension << "\n"
            << "dim: " << rep.dim << "\n"
            << "cohen_macaulay: " << (rep.cohen_macaulay ? "true" : "false") << "\n"
            << "field_char: " << rep.field_char << "\n";
      }
      return kExitOk;
    }

    if (*cmd_hilbert) {
      const auto series = hilbert_series(hilbert_in.load());
      if (as_json)
        out << series_to_json(series).dump(2) << "\n";
      else
        out << series.str() << "\n";
      return kExitOk;
    }

    if (*cmd_polarize) {
      const auto I = polarize_in.load();
      auto [Ip, pm] = polarize_ideal(I);
      if (as_json) {
        out << json{{"ideal", ideal_to_json(I)},
                    {"polarized_ideal", ideal_to_json(Ip)},
                    {"n1", pm.steps}}
                   .dump(2)
            << "\n";
      } else {
        out << "polarized_ideal: " << ideal_str(Ip) << "\n"
            << "n1: " << pm.steps << "\n";
      }
      return kExitOk;
    }

    if (*cmd_sdepth) {
      const auto I = sdepth_in.load();
      const auto rep = depth_report(I, field);
      const auto res = solve_stanley_depth(I, sopts);
      if (as_json) {
        out << solver_result_to_json(res, rep.depth, field.p).dump(2) << "\n";
      } else {
        out << "sdepth: " << res.sdepth << "\n"
            << "depth: " << rep.depth << "\n"
            << "exact: " << (res.exact ? "true" : "false") << "\n";
        print_partition(out, res.lifted);
      }
      return kExitOk;
    }

    if (*cmd_partition) {
      const auto I = partition_in.load();
      const auto res = nice_partition(I, field, sopts);
      if (!res.partition) {
        err << "no nice partition: " << res.finding << "\n";
        return kExitNegative;
      }
      if (as_json) {
        json j = partition_to_json(*res.partition);
        j["depth"] = res.depth.depth;
        j["sdepth"] = res.solver.sdepth;
        out << j.dump(2) << "\n";
      } else {
        out << "depth: " << res.depth.depth << ", sdepth: " << res.solver.sdepth << "\n";
        print_partition(out, *res.partition);
      }
      return kExitOk;
    }

    if (*cmd_transfer) {
      const auto I = transfer_in.load();
      TransferCertificate cert;
      try {
        cert = run_transfer(I, field, sopts);
      } catch (const std::invalid_argument& e) {
        err << "transfer failed: " << e.what() << "\n";
        return kExitNegative;
      }
      if (as_json) {
        out << transfer_certificate_to_json(cert).dump(2) << "\n";
      } else {
        out << "polarized_ideal: " << ideal_str(cert.polarized_ideal) << "\n"
            << "n1: " << cert.steps << "\n"
            << "input_depth: " << cert.input_depth << "\n"
            << "output_depth: " << cert.output_depth << "\n"
            << "verified: " << (cert.verified ? "true" : "false") << "\n";
        print_partition(out, cert.output_partition);
      }
      return kExitOk;
    }

    if (*cmd_verify) {
      std::ifstream in(verify_file);
      if (!in) throw std::invalid_argument("cannot open " + verify_file);
      const auto p = partition_from_json(json::parse(in));
      const std::uint64_t depth = verify_depth >= 0
                                      ? static_cast<std::uint64_t>(verify_depth)
                                      : static_cast<std::uint64_t>(depth_report(p.ideal, field).depth);
      const auto rep = verify(p, depth);
      if (as_json) {
        out << verification_report_to_json(rep).dump(2) << "\n";
      } else {
        out << "contained: " << (rep.contained ? "true" : "false") << "\n"
            << "disjoint: " << (rep.disjoint ? "true" : "false") << "\n"
            << "covers: " << (rep.covers ? "true" : "false") << "\n"
            << "nice: " << (rep.nice ? "true" : "false") << "\n"
            << "min_inf: " << rep.min_inf << "\n"
            << "depth_used: " << rep.depth_used << "\n";
        for (const auto& f : rep.failures) out << "failure: " << f << "\n";
      }
      return rep.all_good() && rep.nice ? kExitOk : kExitNegative;
    }

    if (*cmd_corpus) {
      const auto ideals = generate_corpus(copts);
      json rows = json::array();
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        const auto& I = ideals[i];
        const auto rep = depth_report(I, field);
        const auto res = solve_stanley_depth(I, sopts);
        const auto check = verify(res.lifted, static_cast<std::uint64_t>(res.sdepth));
        if (as_json) {
          json row;
          row["ideal"] = ideal_to_json(I);
          row["depth"] = rep.depth;
          row["sdepth"] = res.sdepth;
          row["sdepth_ge_depth"] = res.sdepth >= rep.depth;
          row["witness_min_inf"] = check.min_inf;
          row["exact"] = res.exact;
          row["verified"] = check.all_good();
          rows.push_back(std::move(row));
        } else {
          out << i << ": " << ideal_str(I) << " depth=" << rep.depth
              << " sdepth=" << res.sdepth
              << (res.sdepth >= rep.depth ? " conjecture_ok" : " CONJECTURE_VIOLATION")
              << (check.all_good() ? "" : " UNVERIFIED") << "\n";
        }
      }
      if (as_json)
        out << json{{"seed", copts.seed},
                    {"count", copts.count},
                    {"field_char", field.p},
                    {"ideals", rows}}
                   .dump(2)
            << "\n";
      return kExitOk;
    }

    err << "no command\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cap_exceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace stanpart
