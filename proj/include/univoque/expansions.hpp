#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univoque/base.hpp"

namespace univoque {

// First L digits of the greedy expansion of x.
Word greedy_expand(const BaseContext& ctx, const AlgebraicReal& x, int L);
// Full greedy expansion, detected as eventually periodic within `bound` digits.
EpSeq greedy_sequence(const BaseContext& ctx, const AlgebraicReal& x, std::size_t bound = 4096);
EpSeq quasi_greedy_expand(const BaseContext& ctx, const AlgebraicReal& x, std::size_t bound = 4096);

enum class CountKind { EXACT, INFINITE_CYCLE, CAP_EXCEEDED };
const char* count_kind_name(CountKind k);

struct ExpansionCount {
  CountKind kind = CountKind::EXACT;
  std::uint64_t count = 0;           // number of expansions when EXACT
  std::vector<EpSeq> witnesses;      // all expansions when EXACT, lexicographically increasing
  std::size_t states = 0;            // distinct remainders visited
  std::size_t branching_states = 0;  // remainders with two feasible digits lying on a cycle
  std::string to_string() const;
};

constexpr std::size_t DEFAULT_CAP = 10000;

ExpansionCount count_expansions(const BaseContext& ctx, const AlgebraicReal& x, std::size_t cap = DEFAULT_CAP);

enum class Strictness { STRICT, WEAK };

struct FilterResult {
  bool ok = false;
  std::string failure;           // first violated condition, empty when ok
  bool reduced_pair = false;     // prefix bounded by the reflected α prefix, tail bounded by α
  bool starts_with_conj = false;  // c starts with the reflection of α₁⋯α_N
  explicit operator bool() const { return ok; }
};

FilterResult f_family_filter(const BaseContext& ctx, const EpSeq& c, Strictness strictness);

// Least c = u·v^∞ starting with the reflected period of α that passes the strict filter,
// searched by increasing |u|+|v| up to 4N.
std::optional<EpSeq> default_witness_tail(const BaseContext& ctx);

struct Witness {
  AlgebraicReal value;
  std::vector<EpSeq> expansions;  // the m expansions named by the construction
};

// x_m = (1 0^{(m−1)N} c)_q together with its known expansions.
Witness build_witness_xm(const BaseContext& ctx, int m, const EpSeq& c,
                         Strictness strictness = Strictness::STRICT);

struct AlphaStructure {
  bool trivial = false;   // q = p_L
  std::vector<int> k;     // k₁, k₂, … through one full period
  std::size_t k_period_start = 0;
  std::size_t k_period = 0;
  std::string to_string() const;
};

// α(q) = w⁺ (reflected w^{k₁}w⁺)(w^{k₂}w⁺)… with w the period of α(p_L); absent outside [p_L, p_R).
std::optional<AlphaStructure> alpha_structure(const BaseContext& ctx, const BaseContext& pL);

}  // namespace univoque
