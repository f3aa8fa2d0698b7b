// solve_small.cpp — worked example for the solver API. Generates a planted
// instance, runs plain local search, the refined multi-pass variant, and the
// exact branch-and-bound solver, then prints the certified lower bound for
// the local-search solution. Build target: sample_solve.

#include <iostream>
#include <string>
#include <vector>

#include "vca/bounds.hpp"
#include "vca/exact.hpp"
#include "vca/generator.hpp"
#include "vca/instance.hpp"
#include "vca/local_search.hpp"

namespace {

std::string show(const std::vector<vca::Chord>& links) {
  std::string text = "{";
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i) text += ", ";
    text += vca::to_string(links[i]);
  }
  return text + "}";
}

}  // namespace

int main() {
  // A 12-cycle with two planted crossing pairs plus random noise links.
  const vca::Instance inst = vca::gen_planted(12, 8.0 / 12.0, 42);
  std::cout << "instance: n=" << inst.n() << ", candidate links "
            << show(inst.links()) << "\n\n";

  vca::SearchParams params;
  params.alpha = vca::Rational(3, 4);
  params.n_max = 8;
  const vca::SearchResult plain = vca::local_search(inst, params);
  const vca::LinkSet solution = plain.f.unite(plain.q);
  std::cout << "local search (alpha 3/4):\n"
            << "  critical set F  = " << show(plain.f.members()) << "\n"
            << "  completion Q    = " << show(plain.q.members()) << "\n"
            << "  solution size   = " << solution.size() << "\n";

  vca::SearchParams refined = params;
  refined.alphas = vca::alpha_schedule(4);
  const vca::SearchResult walked = vca::refined_local_search(inst, refined);
  std::cout << "refined search (" << refined.alphas.size() << " passes): size "
            << walked.f.unite(walked.q).size() << "\n";

  const vca::ExactResult best = vca::exact_optimum(inst);
  std::cout << "exact optimum: size " << best.size << ", witness "
            << show(best.witness.members()) << "\n\n";

  const vca::BoundsReport report =
      vca::certify(inst, plain.f, solution, params.alpha, params.n_max);
  std::cout << "certificate for the local-search run:\n"
            << "  critical        = " << (report.critical ? "yes" : "no")
            << "\n"
            << "  half bound      = " << report.half_bound << "\n";
  if (report.lp_bound)
    std::cout << "  lp bound        = " << vca::format_rational(*report.lp_bound)
              << "\n";
  std::cout << "  certified lower = " << report.lower_bound << "\n"
            << "  gap             = " << (solution.size() - best.size)
            << " link(s) above the optimum\n";
  return 0;
}
