#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace univoque {

using Digit = int;
using Word = std::vector<Digit>;

// Thrown for malformed user input (bad digits, bad grammar, unsupported base).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when two independent computations disagree.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

inline Cmp cmp_of(int v) { return v < 0 ? Cmp::LT : (v > 0 ? Cmp::GT : Cmp::EQ); }
const char* cmp_name(Cmp c);

// Eventually periodic sequence pre · per^∞ in canonical form:
// per is primitive and pre is as short as possible.
class EpSeq {
 public:
  EpSeq();  // 0^∞
  EpSeq(Word pre, Word per);

  static EpSeq periodic(Word per) { return EpSeq({}, std::move(per)); }
  static EpSeq finite(Word w) { return EpSeq(std::move(w), {0}); }
  static EpSeq constant(Digit d) { return EpSeq({}, {d}); }

  const Word& pre() const { return pre_; }
  const Word& per() const { return per_; }

  // digit at 0-based position i
  Digit at(std::size_t i) const;
  Word prefix(std::size_t n) const;

  bool is_zero() const { return pre_.empty() && per_ == Word{0}; }
  bool has_finite_tail() const { return per_ == Word{0}; }  // ends in 0^∞
  bool is_purely_periodic() const { return pre_.empty(); }
  // no last nonzero digit, or 0^∞ itself
  bool is_infinite() const { return !has_finite_tail() || is_zero(); }
  bool is_doubly_infinite(Digit M) const;

  // Trailing nonzero word of a sequence ending in 0^∞ (empty for 0^∞).
  Word finite_word() const;

  Digit max_digit() const;

  friend bool operator==(const EpSeq&, const EpSeq&) = default;

 private:
  void canonicalize();
  Word pre_;
  Word per_;
};

// Lexicographic order over infinite sequences.
Cmp lex_cmp(const EpSeq& a, const EpSeq& b);
inline bool lex_less(const EpSeq& a, const EpSeq& b) { return lex_cmp(a, b) == Cmp::LT; }
inline bool lex_leq(const EpSeq& a, const EpSeq& b) { return lex_cmp(a, b) != Cmp::GT; }

// Lexicographic order on words of equal length; shorter words compared on common prefix then length.
int word_cmp(const Word& a, const Word& b);

void check_alphabet(const Word& w, Digit M);
void check_alphabet(const EpSeq& s, Digit M);

Word reflect(const Word& w, Digit M);
EpSeq reflect(const EpSeq& s, Digit M);
EpSeq shift(const EpSeq& s, std::size_t n);

// w · s
EpSeq prepend(const Word& w, const EpSeq& s);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::size_t k);
// w⁺ and w⁻ act on the last digit
Word plus(Word w);
Word minus(Word w);

// Text grammar: digits 0-9 inline or comma-separated when any digit ≥ 10,
// optional "(period)" suffix with an optional trailing '^'.
EpSeq parse_seq(std::string_view text);
Word parse_word(std::string_view text);
std::string to_string(const Word& w);
std::string to_string(const EpSeq& s);

bool is_greedy_beta(Digit M, const EpSeq& s);
bool is_quasigreedy_alpha(Digit M, const EpSeq& s);

enum class BaseClass { IN_U, IN_CLOSURE_U_NOT_U, IN_V_NOT_CLOSURE_U, NOT_IN_V };
const char* class_name(BaseClass c);

// Base class from the quasi-greedy α; β is derived internally.
BaseClass classify_alpha(Digit M, const EpSeq& alpha);
// β of the base whose quasi-greedy expansion of 1 is alpha.
EpSeq beta_from_alpha(Digit M, const EpSeq& alpha);
// α of the base whose greedy expansion of 1 is beta.
EpSeq alpha_from_beta(Digit M, const EpSeq& beta);

enum class UniqMode { UNIQUE, DOUBLY_INFINITE };
bool is_unique_expansion_seq(const EpSeq& alpha, const EpSeq& c, Digit M, UniqMode mode);

// Positions n ≥ 1 worth checking for shift conditions on s: one preperiod plus two periods.
std::size_t window(const EpSeq& s);

}  // namespace univoque
