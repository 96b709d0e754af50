#include "lando/census.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <thread>

#include "lando/diagram_io.hpp"
#include "lando/enumeration.hpp"
#include "lando/realizability.hpp"

namespace lando {

namespace {

struct Job {
  const Tree* g;
  const Tree* h;
};

struct Outcome {
  bool realizable = false;
  std::string witness;
  std::uint64_t nodes = 0;
  long long millis = 0;
};

Outcome solve(const Job& job) {
  const SearchReport r = decide_lando(*job.g, *job.h);
  Outcome o;
  o.realizable = r.witness.has_value();
  if (r.witness) o.witness = format_bijection(*r.witness, *job.g, *job.h);
  o.nodes = r.nodes_explored;
  o.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
  return o;
}

// Results land at their job index, so output order is independent of the
// number of workers.
std::vector<Outcome> solve_all(const std::vector<Job>& jobs,
                               std::size_t workers) {
  std::vector<Outcome> out(jobs.size());
  if (workers <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = solve(jobs[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs.size();
           i = next.fetch_add(1)) {
        out[i] = solve(jobs[i]);
      }
    });
  }
  pool.clear();
  return out;
}

std::string tail_columns(const Outcome& o, bool timing) {
  std::string row = o.realizable ? "yes," : "no,";
  if (!o.witness.empty()) row += "\"" + o.witness + "\"";
  row += "," + std::to_string(o.nodes) + ",";
  if (timing) row += std::to_string(o.millis);
  return row;
}

}  // namespace

CensusResult run_census(const CensusOptions& options) {
  CensusResult result;
  result.csv = "canonical_g,canonical_h,realizable,witness,nodes,millis\n";
  for (std::size_t k = 1; k <= options.max_edges; ++k) {
    const std::vector<Tree> trees = enumerate_free_trees(k);
    std::vector<std::string> forms;
    for (const Tree& t : trees) forms.push_back(canonical_form(t));
    std::vector<Job> jobs;
    std::vector<std::pair<std::size_t, std::size_t>> index;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        jobs.push_back({&trees[i], &trees[j]});
        index.emplace_back(i, j);
      }
    }
    if (options.progress) {
      *options.progress << "census: k=" << k << " trees=" << trees.size()
                        << " pairs=" << jobs.size() << std::endl;
    }
    const std::vector<Outcome> outcomes = solve_all(jobs, options.jobs);
    for (std::size_t p = 0; p < jobs.size(); ++p) {
      const std::string row = forms[index[p].first] + "," +
                              forms[index[p].second] + "," +
                              tail_columns(outcomes[p], options.timing);
      result.csv += row + "\n";
      if (!outcomes[p].realizable) result.negatives.push_back(row);
    }
  }
  return result;
}

CensusResult run_problem2(const CensusOptions& options) {
  CensusResult result;
  result.csv = "k,canonical_g,realizable,witness,nodes,millis\n";
  for (std::size_t k = 1; k <= options.max_edges; ++k) {
    const std::vector<Tree> trees = enumerate_free_trees(k);
    const Tree path = path_tree(k);
    std::vector<Job> jobs;
    for (const Tree& t : trees) jobs.push_back({&t, &path});
    if (options.progress) {
      *options.progress << "problem2: k=" << k << " trees=" << trees.size()
                        << std::endl;
    }
    const std::vector<Outcome> outcomes = solve_all(jobs, options.jobs);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      const std::string row = std::to_string(k) + "," +
                              canonical_form(trees[i]) + "," +
                              tail_columns(outcomes[i], options.timing);
      result.csv += row + "\n";
      if (!outcomes[i].realizable) result.negatives.push_back(row);
    }
  }
  return result;
}

}  // namespace lando
