#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "univoque/graph.hpp"

namespace fixtures {

using univoque::BaseContext;
using univoque::Digit;

// Bases in closure(U) minus U used throughout the checks.
inline std::vector<std::pair<Digit, std::string>> closure_battery() {
  return {{1, "111(0)"}, {1, "11011(0)"}, {4, "4331(0)"}, {3, "331(0)"}, {4, "322(0)"}, {1, "111001010(0)"}};
}

inline BaseContext make(Digit M, const std::string& beta) {
  return univoque::new_base_context(M, univoque::parse_seq(beta));
}

// Random finite greedy expansions of 1 whose base lies in V minus U, alpha period at most maxN.
inline std::vector<BaseContext> random_graph_bases(unsigned seed, std::size_t count, std::size_t maxN = 8,
                                                   Digit maxM = 4) {
  std::mt19937 rng(seed);
  std::vector<BaseContext> out;
  std::size_t closure = 0;
  while (out.size() < count) {
    Digit M = std::uniform_int_distribution<Digit>(1, maxM)(rng);
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, maxN)(rng);
    univoque::Word w(len);
    // greedy words start high; bias the first digit
    w[0] = std::uniform_int_distribution<Digit>(std::max(1, M / 2), M)(rng);
    for (std::size_t i = 1; i < len; ++i) w[i] = std::uniform_int_distribution<Digit>(0, w[0])(rng);
    if (w.back() == 0) w.back() = 1;
    auto beta = univoque::EpSeq::finite(w);
    if (beta == univoque::EpSeq::finite({1}) || !univoque::is_greedy_beta(M, beta)) continue;
    auto alpha = univoque::alpha_from_beta(M, beta);
    auto cls = univoque::classify_alpha(M, alpha);
    if (cls != univoque::BaseClass::IN_CLOSURE_U_NOT_U && cls != univoque::BaseClass::IN_V_NOT_CLOSURE_U) continue;
    // keep both classes represented
    bool is_closure = cls == univoque::BaseClass::IN_CLOSURE_U_NOT_U;
    if (!is_closure && 2 * closure < out.size()) continue;
    auto ctx = univoque::new_base_context(M, beta);
    if (ctx.N > maxN) continue;
    closure += is_closure;
    out.push_back(std::move(ctx));
  }
  return out;
}

}  // namespace fixtures
