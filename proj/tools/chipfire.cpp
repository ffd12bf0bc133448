#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "chipfire/chipfire.hpp"
#include "chipfire/repro.hpp"

namespace {

using namespace chipfire;

// Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
constexpr int kFail = 1;
constexpr int kUsage = 2;

Multigraph load_graph(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text);
  }
  return parse_graph(read_file(path));
}

// Either a file holding a divisor line or the line itself.
Divisor load_divisor(const std::string& arg, const Multigraph& g) {
  Divisor d = arg.rfind("div", 0) == 0 ? parse_divisor(arg) : parse_divisor(read_file(arg));
  chipfire::detail::require(d.size() == g.vertex_count(), "divisor has " + std::to_string(d.size()) +
                                                              " entries but the graph has " +
                                                              std::to_string(g.vertex_count()) + " vertices");
  return d;
}

FamilySpec family_spec(const std::string& kind, const std::vector<long long>& params) {
  return {family_kind_from_string(kind), params};
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

void print_stats(const SearchStats& s, std::ostream& out) {
  out << "candidates=" << s.candidates << "\n";
  out << "not_reduced=" << s.not_reduced << "\n";
  out << "certificate_prunes=" << s.certificate_prunes << "\n";
  out << "full_checks=" << s.full_checks << "\n";
  std::string degrees;
  for (int d : s.degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
  out << "degrees=" << degrees << "\n";
  out << "seconds=" << s.seconds << "\n";
}

void print_search(const GonalitySearchResult& r, bool witness, bool stats) {
  std::cout << (r.infinite() ? std::string("inf") : std::to_string(*r.value)) << "\n";
  if (witness && !r.infinite()) std::cout << emit_divisor(r.witness) << "\n";
  if (stats) print_stats(r.stats, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chip-firing divisor toolkit: reduction, rank and gonality"};
  app.require_subcommand(1);

  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  app.add_option("--jobs", jobs, "worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampled checks");

  std::string graph_path, divisor_arg, kind, output, scale = "quick", only;
  std::vector<long long> params;
  Vertex q = 0;
  int r = 1;
  bool want_script = false, want_witness = false, want_stats = false;

  auto* family = app.add_subcommand("family", "write a family graph in canonical format");
  family->add_option("kind", kind, "family name")->required();
  family->add_option("params", params, "family parameters");
  family->add_option("-o,--output", output, "output file (default stdout)");

  auto* dhar_cmd = app.add_subcommand("dhar", "run one burning pass");
  dhar_cmd->add_option("graph", graph_path)->required();
  dhar_cmd->add_option("divisor", divisor_arg, "divisor file or inline 'div n: ...'")->required();
  dhar_cmd->add_option("--from", q, "vertex where the fire starts")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "compute the q-reduced representative");
  reduce_cmd->add_option("graph", graph_path)->required();
  reduce_cmd->add_option("divisor", divisor_arg)->required();
  reduce_cmd->add_option("--base", q, "base vertex q");
  reduce_cmd->add_flag("--script", want_script, "print the firing script");

  auto* rank_cmd = app.add_subcommand("rank", "Baker-Norine rank");
  rank_cmd->add_option("graph", graph_path)->required();
  rank_cmd->add_option("divisor", divisor_arg)->required();

  auto* rr_cmd = app.add_subcommand("rr", "both sides of Riemann-Roch");
  rr_cmd->add_option("graph", graph_path)->required();
  rr_cmd->add_option("divisor", divisor_arg)->required();

  auto* gon_cmd = app.add_subcommand("gon", "divisorial gonality");
  auto* mfgon_cmd = app.add_subcommand("mfgon", "multiplicity-free gonality");
  for (auto* sub : {gon_cmd, mfgon_cmd}) {
    sub->add_option("graph", graph_path)->required();
    sub->add_option("-r", r, "required rank")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--witness", want_witness, "print the witness divisor");
    sub->add_flag("--stats", want_stats, "print search statistics as key=value lines");
  }

  auto* predict_cmd = app.add_subcommand("predict", "closed-form gon and mfgon for a family instance");
  predict_cmd->add_option("kind", kind)->required();
  predict_cmd->add_option("params", params);

  auto* verify_cmd = app.add_subcommand("verify-paper", "recompute the published values");
  verify_cmd->add_option("--scale", scale, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--only", only, "run a single row by id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*family) {
      const std::string text = emit_graph(build(family_spec(kind, params)));
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        if (!out) throw Error("cannot write " + output);
        out << text;
      }
      return 0;
    }
    if (*predict_cmd) {
      const PredictionPair p = predicted(family_spec(kind, params));
      for (const Prediction* pr : {&p.gon, &p.mfgon}) {
        std::cout << (pr->quantity == Quantity::gon ? "gon" : "mfgon") << " "
                  << (pr->known() ? std::to_string(*pr->value) : std::string("unknown"));
        if (pr->known()) std::cout << " [" << pr->source << "]";
        std::cout << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      repro::ReproOptions opt;
      opt.scale = scale == "full" ? repro::Scale::full : repro::Scale::quick;
      opt.jobs = jobs;
      opt.seed = seed;
      repro::ReproReport report;
      bool matched = false;
      for (const auto& c : repro::criteria()) {
        if (!only.empty() && c.id != only) continue;
        matched = true;
        report.rows.push_back(repro::run_criterion(c, opt));
      }
      if (!matched) throw InvalidArgument("no row with id " + only);
      std::cout << repro::format_report(report);
      return report.ok() ? 0 : kFail;
    }

    const Multigraph g = load_graph(graph_path);
    if (*gon_cmd || *mfgon_cmd) {
      SearchOptions opt;
      opt.rank = r;
      opt.jobs = jobs;
      print_search(*gon_cmd ? gonality(g, opt) : mf_gonality(g, opt), want_witness, want_stats);
      return 0;
    }

    const Divisor d = load_divisor(divisor_arg, g);
    if (*dhar_cmd) {
      const BurnReport b = dhar(g, d, q);
      std::cout << "source " << b.source << "\n";
      std::cout << "burned " << vertex_list(b.burned_order) << "\n";
      std::cout << "unburned " << vertex_list(b.unburned.members()) << "\n";
    } else if (*reduce_cmd) {
      const ReductionResult res = q_reduce(g, d, q);
      std::cout << emit_divisor(res.reduced) << "\n";
      if (want_script)
        for (const FiringStep& s : res.script) std::cout << "fire " << s.times << " : " << vertex_list(s.set.members()) << "\n";
    } else if (*rank_cmd) {
      const RankResult res = rank(g, d);
      std::cout << "rank " << res.value << "\n";
      if (res.value < 0)
        std::cout << "debt_at " << res.base_vertex << "\n";
      else
        std::cout << "witness " << emit_divisor(res.witness) << "\n";
    } else if (*rr_cmd) {
      const RiemannRochSides s = riemann_roch_sides(g, d);
      std::cout << "rank_D=" << s.rank_d << "\n"
                << "rank_K_minus_D=" << s.rank_k_minus_d << "\n"
                << "degree=" << s.degree << "\n"
                << "genus=" << s.genus << "\n"
                << "lhs=" << s.lhs() << "\n"
                << "rhs=" << s.rhs() << "\n"
                << "holds=" << (s.holds() ? "true" : "false") << "\n";
      return s.holds() ? 0 : kFail;
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
