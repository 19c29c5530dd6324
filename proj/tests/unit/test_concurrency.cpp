#include "doctest.h"

#include <thread>

#include "generators.hpp"
#include "qsyslab/workspace.hpp"

using namespace qsyslab;

TEST_CASE("verifiers give identical answers from many threads") {
  testing::Rng rng(51);
  const auto elems = testing::generated_qbes(rng);
  const FiniteQuantumGroup s3 = function_algebra_of_group(symmetric_group(3));

  std::vector<double> expect;
  for (const auto& e : elems) expect.push_back(verify_qbe(e).max_residual());
  const double cqg_expect = verify_cqg(s3).max_residual();
  const std::string ws = cli::bundled_examples().at("s3_function_algebra");
  const std::string report_expect =
      cli::make_report_body(cli::Workspace::from_json(cli::json::parse(ws)).run(Tolerance()), Tolerance()).dump();

  constexpr int kThreads = 4;
  std::vector<int> mismatches(kThreads, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < kThreads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = static_cast<std::size_t>(t); k < elems.size(); k += kThreads)
        if (verify_qbe(elems[k]).max_residual() != expect[k]) ++mismatches[t];
      if (verify_cqg(s3).max_residual() != cqg_expect) ++mismatches[t];
      const auto body = cli::make_report_body(cli::Workspace::from_json(cli::json::parse(ws)).run(Tolerance()),
                                              Tolerance());
      if (body.dump() != report_expect) ++mismatches[t];
    });
  }
  for (auto& th : pool) th.join();
  for (int m : mismatches) CHECK(m == 0);
}
