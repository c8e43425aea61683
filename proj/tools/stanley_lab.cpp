// stanley-lab: edge ideals of multipartite graphs and uniform bipartite
// hypergraphs, closed-form Stanley-depth bounds, exact Stanley depth via
// interval partitions, associated primes, big size, and a homology depth
// oracle.
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "stanley/job.hpp"

namespace {

int execute(stanley::Job job) {
  // The environment variable wins over --cache.
  if (const char* env = std::getenv("STANLEY_LAB_CACHE"); env && *env)
    job.cache_dir = env;
  stanley::RunOutcome outcome = stanley::run_job(job);
  if (!outcome.output.empty()) std::cout << outcome.output;
  if (!outcome.error.empty()) std::cerr << "error: " << outcome.error << '\n';
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley depth laboratory for squarefree edge ideals"};
  app.require_subcommand(1);

  stanley::Job job;
  std::string format = "text";
  app.add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache", job.cache_dir,
                 "Cache directory for exact-sdepth results (STANLEY_LAB_CACHE overrides)");
  app.add_option("--deadline", job.deadline_seconds,
                 "Abort the sdepth search after this many seconds (exit code 3)");
  app.add_option("--poset-cap", job.poset_cap,
                 "Explicit poset enumeration cap (default 24)");
  app.add_option("--char", job.field_char, "Field characteristic for depth: 0 or 2")
      ->check(CLI::IsMember({0, 2}));
  app.add_option("--threads", job.threads, "Worker count for the sdepth search");
  app.add_flag("--binary-search", job.binary_search,
               "Bisect on depth instead of the descending scan");
  app.add_flag("--memo", job.memoize, "Memoize failed search states");
  long forced_A = 0;
  CLI::Option* force_a_opt =
      app.add_option("--force-A", forced_A,
                     "Debug: override the Lemma 2.4 integer bound A in Theorem 2.9");

  struct Sub {
    const char* name;
    const char* help;
    stanley::Command command;
    bool takes_ideal;
  };
  const Sub subs[] = {
      {"gen", "Construct an ideal and print its canonical form", stanley::Command::Gen, true},
      {"bounds", "Closed-form Stanley depth bounds", stanley::Command::Bounds, true},
      {"sdepth", "Exact Stanley depth via interval partition search", stanley::Command::Sdepth, true},
      {"ass", "Associated primes (closed form or cover enumeration)", stanley::Command::Ass, true},
      {"bigsize", "Big size of the associated primes", stanley::Command::BigSize, true},
      {"depth", "Depth of S/I via the homology oracle", stanley::Command::Depth, true},
      {"verify", "Stanley-conjecture certificate for a k-partite ideal", stanley::Command::Verify, true},
      {"reproduce", "Re-run the worked examples and consistency checks", stanley::Command::Reproduce, false},
  };

  for (const Sub& sub : subs) {
    CLI::App* s = app.add_subcommand(sub.name, sub.help);
    s->fallthrough();  // global options may follow the subcommand
    if (sub.takes_ideal)
      s->add_option("ideal", job.input_text,
                    "Ideal DSL, e.g. \"kpartite 7 7 7 9\" or \"ideal n=2: x1*x2\"")
          ->required();
    s->parse_complete_callback([&job, &sub] { job.command = sub.command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 reports 0 for --help; anything else is a usage problem.
    return code == 0 ? 0 : 2;
  }

  job.format = format == "json"  ? stanley::OutputFormat::Json
               : format == "csv" ? stanley::OutputFormat::Csv
                                 : stanley::OutputFormat::Text;
  if (force_a_opt->count() > 0) job.force_A = forced_A;

  return execute(std::move(job));
}
