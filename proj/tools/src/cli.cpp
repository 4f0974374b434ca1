#include "vcprune_cli/cli.hpp"

#include "vcprune/prover.hpp"
#include "vcprune/smt_emit.hpp"
#include "vcprune/strategy.hpp"
#include "vcprune/vc_io.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace vcprune::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kDefaultProver = "z3 -T:{timeout_s} {input}";

struct SelectionFlags {
  bool with_comparisons = true;
  bool prune_context = true;
  bool coarse_weights = true;
  std::string vars_filter = "CNF";
  std::string criterion = "full";
  double t_v = 0.5;
  double t_p = 0.5;

  PruneOptions options() const {
    PruneOptions o;
    o.with_comparisons = with_comparisons;
    o.prune_context = prune_context;
    o.coarse_weights = coarse_weights;
    o.cnf_filter = vars_filter == "CNF";
    if (criterion == "any") {
      o.criterion = SelectionCriterion::any_overlap();
    } else if (criterion == "threshold") {
      o.criterion = SelectionCriterion::threshold(t_v, t_p);
    } else {
      o.criterion = SelectionCriterion::full_inclusion();
    }
    return o;
  }
};

void add_selection_flags(CLI::App& cmd, SelectionFlags& f) {
  cmd.add_flag("--prune-with-comp,!--no-prune-with-comp", f.with_comparisons,
               "Add comparison predicates to the predicate graph");
  cmd.add_flag("--prune-context,!--no-prune-context", f.prune_context,
               "Select context axioms as well as hypotheses");
  cmd.add_flag("--prune-coarse-pred-comp,!--no-prune-coarse-pred-comp",
               f.coarse_weights, "Ignore predicate arc weights");
  cmd.add_option("--prune-vars-filter", f.vars_filter,
                 "Clausify hypotheses before filtering (CNF) or not (none)")
      ->check(CLI::IsMember({"CNF", "none"}));
  cmd.add_option("--criterion", f.criterion, "Relevance criterion")
      ->check(CLI::IsMember({"full", "any", "threshold"}));
  cmd.add_option("--tv", f.t_v, "Constant threshold")->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--tp", f.t_p, "Predicate threshold")->check(CLI::Range(0.0, 1.0));
}

SmtOptions smt_options(const std::vector<std::string>& ordered) {
  SmtOptions o;
  o.ordered_sorts.insert(ordered.begin(), ordered.end());
  return o;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  os << text;
}

void dump_graphs(const fs::path& dir, const std::string& stem, const Pruner& p) {
  fs::create_directories(dir);
  std::ostringstream c;
  p.constant_graph().write_dot(c);
  write_file(dir / (stem + ".constants.dot"), c.str());
  std::ostringstream g;
  p.predicate_graph().write_dot(g);
  write_file(dir / (stem + ".predicates.dot"), g.str());
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const std::string& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(p)) {
        if (e.is_regular_file() && e.path().extension() == ".vc") found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

struct DischargeJob {
  fs::path path;
  std::string log;
  std::string summary;
  std::string error;
  Outcome outcome = Outcome::ProverError;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification-condition pruning and incremental discharge", "vcprune"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "vcprune 0.1.0");

  // prune
  CLI::App* prune = app.add_subcommand("prune", "Print the reduced VC at a cursor");
  SelectionFlags prune_flags;
  std::size_t cursor_i = 0;
  std::size_t cursor_j = 0;
  std::string emit = "native";
  std::string prune_input;
  std::string prune_dump;
  std::vector<std::string> prune_ordered;
  add_selection_flags(*prune, prune_flags);
  prune->add_option("--i", cursor_i, "Predicate depth");
  prune->add_option("--j", cursor_j, "Constant depth");
  prune->add_option("--emit", emit, "Output syntax")->check(CLI::IsMember({"native", "smt"}));
  prune->add_option("--dump-graphs", prune_dump, "Directory for DOT dumps");
  prune->add_option("--ordered-sort", prune_ordered, "Totally ordered non-integer sort")
      ->allow_extra_args(false);
  prune->add_option("input", prune_input, "VC file")->required();

  // discharge
  CLI::App* dis = app.add_subcommand("discharge", "Run the incremental discharge loop");
  SelectionFlags dis_flags;
  std::string prover_spec;
  double timeout_s = 10.0;
  std::vector<std::string> patterns;
  std::string results_path;
  std::size_t jobs = 1;
  std::string dis_dump;
  std::vector<std::string> dis_ordered;
  std::vector<std::string> dis_inputs;
  add_selection_flags(*dis, dis_flags);
  dis->add_option("--prover", prover_spec,
                  "Command template with {input} and {timeout_s}, mock:..., or resolution[:N]");
  dis->add_option("--timeout", timeout_s, "Per-call timeout in seconds")
      ->check(CLI::PositiveNumber);
  dis->add_option("--pattern", patterns,
                  "Output classification rule pattern=outcome, in priority order")
      ->allow_extra_args(false);
  dis->add_option("--results", results_path, "Attempt log file");
  dis->add_option("--jobs", jobs, "VCs discharged concurrently")->check(CLI::PositiveNumber);
  dis->add_option("--dump-graphs", dis_dump, "Directory for DOT dumps");
  dis->add_option("--ordered-sort", dis_ordered, "Totally ordered non-integer sort")
      ->allow_extra_args(false);
  dis->add_option("inputs", dis_inputs, "VC files or directories of .vc files")->required();

  // graph
  CLI::App* graph = app.add_subcommand("graph", "Print a dependency graph as DOT");
  SelectionFlags graph_flags;
  std::string kind = "constants";
  std::string graph_input;
  add_selection_flags(*graph, graph_flags);
  graph->add_option("--kind", kind, "Graph to print")
      ->check(CLI::IsMember({"constants", "predicates"}));
  graph->add_option("input", graph_input, "VC file")->required();

  // check
  CLI::App* check = app.add_subcommand("check", "Parse and validate VC files");
  std::vector<std::string> check_inputs;
  check->add_option("inputs", check_inputs, "VC files")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*prune) {
      const VerificationCondition vc = parse_vc_file(prune_input);
      const Pruner pruner(vc, prune_flags.options());
      if (!prune_dump.empty()) {
        dump_graphs(prune_dump, fs::path(prune_input).stem().string(), pruner);
      }
      const ReducedVC reduced = pruner.reduce(cursor_i, cursor_j);
      if (emit == "smt") {
        emit_smt(out, reduced.vc, smt_options(prune_ordered));
      } else {
        print_vc(out, reduced.vc);
      }
      write_selection_report(err, reduced.report);
      return kExitSuccess;
    }

    if (*graph) {
      const VerificationCondition vc = parse_vc_file(graph_input);
      const Pruner pruner(vc, graph_flags.options());
      if (kind == "constants") {
        pruner.constant_graph().write_dot(out);
      } else {
        pruner.predicate_graph().write_dot(out);
      }
      return kExitSuccess;
    }

    if (*check) {
      int status = kExitSuccess;
      for (const std::string& path : check_inputs) {
        try {
          const VerificationCondition vc = parse_vc_file(path);
          out << path << ": ok (" << vc.context.size() << " axioms, "
              << vc.hypotheses.size() << " hypotheses)\n";
        } catch (const std::exception& e) {
          err << path << ": " << e.what() << '\n';
          status = kExitUsage;
        }
      }
      return status;
    }

    if (*dis) {
      if (prover_spec.empty()) {
        const char* env = std::getenv("VCPRUNE_PROVER");
        prover_spec = env && *env ? env : kDefaultProver;
      }
      const std::vector<MatchRule> rules =
          patterns.empty() ? default_match_rules()
                           : parse_match_rules([&] {
                               std::string joined;
                               for (const std::string& p : patterns) {
                                 if (!joined.empty()) joined += ',';
                                 joined += p;
                               }
                               return joined;
                             }());
      const PruneOptions options = dis_flags.options();
      const SmtOptions smt = smt_options(dis_ordered);
      const auto timeout = std::chrono::milliseconds(
          static_cast<long long>(std::ceil(timeout_s * 1000.0)));
      // Reject a bad prover spec before any work starts.
      make_prover(prover_spec, rules, smt);

      std::vector<DischargeJob> work;
      for (const fs::path& p : expand_inputs(dis_inputs)) work.push_back(DischargeJob{p, {}, {}, {}});

      std::atomic<std::size_t> next{0};
      std::mutex dump_mutex;
      auto worker = [&] {
        for (std::size_t k = next++; k < work.size(); k = next++) {
          DischargeJob& job = work[k];
          try {
            const VerificationCondition vc = parse_vc_file(job.path.string());
            if (!dis_dump.empty()) {
              std::lock_guard lock(dump_mutex);
              dump_graphs(dis_dump, job.path.stem().string(), Pruner(vc, options));
            }
            std::unique_ptr<Prover> prover = make_prover(prover_spec, rules, smt);
            const DischargeReport report = discharge(vc, *prover, timeout, options);
            std::ostringstream log;
            write_attempt_log(log, report);
            job.log = log.str();
            job.outcome = report.final.outcome;
            std::ostringstream summary;
            summary << job.path.string() << ": " << to_string(report.final.outcome) << " after "
                    << report.attempts.size() << " attempt"
                    << (report.attempts.size() == 1 ? "" : "s") << " (i_max=" << report.i_max
                    << ", j_max=" << report.j_max << ")\n";
            job.summary = summary.str();
          } catch (const std::exception& e) {
            job.error = job.path.string() + ": " + e.what() + "\n";
          }
        }
      };
      std::vector<std::thread> threads;
      const std::size_t n = std::min<std::size_t>(jobs, std::max<std::size_t>(1, work.size()));
      for (std::size_t t = 1; t < n; ++t) threads.emplace_back(worker);
      worker();
      for (std::thread& t : threads) t.join();

      std::ofstream results;
      if (!results_path.empty()) {
        results.open(results_path, std::ios::binary);
        if (!results) throw std::runtime_error("cannot write '" + results_path + "'");
      }
      int status = kExitSuccess;
      for (const DischargeJob& job : work) {
        if (!job.error.empty()) {
          err << job.error;
          status = kExitUsage;
          continue;
        }
        if (results.is_open()) {
          results << job.log;
        } else {
          out << job.log;
        }
        err << job.summary;
        if (job.outcome != Outcome::Unsat && status == kExitSuccess) status = kExitNotProved;
      }
      return status;
    }
  } catch (const std::exception& e) {
    err << "vcprune: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vcprune::cli
