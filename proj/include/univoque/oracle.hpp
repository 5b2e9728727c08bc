#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "univoque/base.hpp"
#include "univoque/graph.hpp"

namespace univoque {

enum class OracleMode { U_PREFIX, V_PREFIX };
const char* oracle_mode_name(OracleMode m);
OracleMode parse_oracle_mode(const std::string& s);

// Words of length L that extend to an eventually periodic sequence obeying the
// shift conditions against α: ≤ for V_PREFIX, < for U_PREFIX.
std::set<Word> enumerate_admissible_words(const BaseContext& ctx, int L, OracleMode mode);

// Compares the length-L path words of g with the admissible words without listing either set.
// Returns a prefix that extends to length L on one side only, or nothing when the sets agree.
std::optional<Word> language_difference(const UnivoqueGraph& g, const BaseContext& ctx, int L, OracleMode mode);

struct BruteCount {
  std::uint64_t pinned = 0;    // feasible prefixes whose remainder has a single continuation
  std::uint64_t feasible = 0;  // prefixes of the given length with remainder in [0, M/(q−1)]
};

// Exhaustive prefix enumeration. Every feasible prefix extends to an expansion, so
// feasible is a lower bound on the count; pinned == feasible makes it exact.
BruteCount brute_count_expansions(const BaseContext& ctx, const AlgebraicReal& x, int depth);

}  // namespace univoque
