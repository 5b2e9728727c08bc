#include "univoque/digits.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace univoque {

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

EpSeq::EpSeq() : per_{0} {}

EpSeq::EpSeq(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {
  if (per_.empty()) throw ValidationError("empty period");
  for (Digit d : pre_)
    if (d < 0) throw ValidationError("negative digit");
  for (Digit d : per_)
    if (d < 0) throw ValidationError("negative digit");
  canonicalize();
}

void EpSeq::canonicalize() {
  const std::size_t p = per_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = per_[i] == per_[i - d];
    if (ok) {
      per_.resize(d);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    pre_.pop_back();
  }
}

Digit EpSeq::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

Word EpSeq::prefix(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

bool EpSeq::is_doubly_infinite(Digit M) const {
  if (is_zero() || (pre_.empty() && per_ == Word{M})) return true;
  return is_infinite() && !(per_ == Word{M});
}

Word EpSeq::finite_word() const {
  if (!has_finite_tail()) throw ValidationError("sequence has no finite tail");
  return pre_;
}

Digit EpSeq::max_digit() const {
  Digit m = *std::max_element(per_.begin(), per_.end());
  for (Digit d : pre_) m = std::max(m, d);
  return m;
}

Cmp lex_cmp(const EpSeq& a, const EpSeq& b) {
  const std::size_t pa = a.per().size(), pb = b.per().size();
  const std::size_t n = std::max(a.pre().size(), b.pre().size()) + std::lcm(pa, pb);
  for (std::size_t i = 0; i < n; ++i) {
    Digit x = a.at(i), y = b.at(i);
    if (x != y) return x < y ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

int word_cmp(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

void check_alphabet(const Word& w, Digit M) {
  for (Digit d : w)
    if (d < 0 || d > M)
      throw ValidationError("digit " + std::to_string(d) + " outside alphabet {0,...," +
                            std::to_string(M) + "}");
}

void check_alphabet(const EpSeq& s, Digit M) {
  check_alphabet(s.pre(), M);
  check_alphabet(s.per(), M);
}

Word reflect(const Word& w, Digit M) {
  check_alphabet(w, M);
  Word r(w.size());
  std::transform(w.begin(), w.end(), r.begin(), [M](Digit d) { return M - d; });
  return r;
}

EpSeq reflect(const EpSeq& s, Digit M) { return EpSeq(reflect(s.pre(), M), reflect(s.per(), M)); }

EpSeq shift(const EpSeq& s, std::size_t n) {
  const Word& pre = s.pre();
  if (n <= pre.size()) return EpSeq(Word(pre.begin() + n, pre.end()), s.per());
  Word per = s.per();
  std::rotate(per.begin(), per.begin() + (n - pre.size()) % per.size(), per.end());
  return EpSeq({}, std::move(per));
}

EpSeq prepend(const Word& w, const EpSeq& s) { return EpSeq(concat(w, s.pre()), s.per()); }

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word power(const Word& w, std::size_t k) {
  Word r;
  r.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

Word plus(Word w) {
  if (w.empty()) throw ValidationError("successor of empty word");
  ++w.back();
  return w;
}

Word minus(Word w) {
  if (w.empty() || w.back() == 0) throw ValidationError("predecessor of word ending in 0");
  --w.back();
  return w;
}

namespace {

Word parse_part(std::string_view s, bool commas) {
  Word w;
  if (commas) {
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string_view::npos) j = s.size();
      std::string_view tok = s.substr(i, j - i);
      if (!tok.empty()) {
        Digit v = 0;
        for (char ch : tok) {
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ValidationError("bad digit token '" + std::string(tok) + "'");
          v = v * 10 + (ch - '0');
          if (v > 1000000) throw ValidationError("digit too large");
        }
        w.push_back(v);
      }
      i = j + 1;
    }
  } else {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ValidationError(std::string("bad digit character '") + ch + "'");
      w.push_back(ch - '0');
    }
  }
  return w;
}

std::string trim(std::string_view s) {
  std::string r;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) r.push_back(ch);
  return r;
}

void append_digits(std::string& out, const Word& w, bool commas, bool lead_sep) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (commas && (i > 0 || lead_sep)) out.push_back(',');
    out += std::to_string(w[i]);
  }
}

}  // namespace

EpSeq parse_seq(std::string_view text) {
  std::string t = trim(text);
  if (!t.empty() && t.back() == '^') t.pop_back();
  if (t.empty()) throw ValidationError("empty sequence");
  const bool commas = t.find(',') != std::string::npos;
  std::size_t open = t.find('(');
  if (open == std::string::npos) {
    if (t.find(')') != std::string::npos) throw ValidationError("unbalanced ')'");
    return EpSeq::finite(parse_part(t, commas));
  }
  std::size_t close = t.find(')', open);
  if (close == std::string::npos || close + 1 != t.size())
    throw ValidationError("period must be a final parenthesized group");
  Word pre = parse_part(std::string_view(t).substr(0, open), commas);
  Word per = parse_part(std::string_view(t).substr(open + 1, close - open - 1), commas);
  if (per.empty()) throw ValidationError("empty period");
  return EpSeq(std::move(pre), std::move(per));
}

Word parse_word(std::string_view text) {
  std::string t = trim(text);
  if (t.find('(') != std::string::npos) throw ValidationError("a finite word has no period");
  return parse_part(t, t.find(',') != std::string::npos);
}

std::string to_string(const Word& w) {
  bool commas = std::any_of(w.begin(), w.end(), [](Digit d) { return d >= 10; });
  std::string out;
  append_digits(out, w, commas, false);
  return out;
}

std::string to_string(const EpSeq& s) {
  bool commas = s.max_digit() >= 10;
  std::string out;
  append_digits(out, s.pre(), commas, false);
  out.push_back('(');
  append_digits(out, s.per(), commas, false);
  out.push_back(')');
  return out;
}

std::size_t window(const EpSeq& s) { return s.pre().size() + 2 * s.per().size(); }

bool is_greedy_beta(Digit M, const EpSeq& s) {
  check_alphabet(s, M);
  if (s.is_zero()) return false;
  for (std::size_t n = 1; n <= window(s); ++n)
    if (s.at(n - 1) < M && !lex_less(shift(s, n), s)) return false;
  return true;
}

bool is_quasigreedy_alpha(Digit M, const EpSeq& s) {
  check_alphabet(s, M);
  if (!s.is_infinite()) return false;
  for (std::size_t n = 1; n <= window(s); ++n)
    if (s.at(n - 1) < M && !lex_leq(shift(s, n), s)) return false;
  return true;
}

const char* class_name(BaseClass c) {
  switch (c) {
    case BaseClass::IN_U: return "U";
    case BaseClass::IN_CLOSURE_U_NOT_U: return "closureU\\U";
    case BaseClass::IN_V_NOT_CLOSURE_U: return "V\\closureU";
    case BaseClass::NOT_IN_V: return "notV";
  }
  return "?";
}

EpSeq alpha_from_beta(Digit M, const EpSeq& beta) {
  check_alphabet(beta, M);
  if (beta.is_zero()) throw ValidationError("beta must be nonzero");
  if (!beta.has_finite_tail()) return beta;
  return EpSeq::periodic(minus(beta.finite_word()));
}

EpSeq beta_from_alpha(Digit M, const EpSeq& alpha) {
  check_alphabet(alpha, M);
  if (alpha.is_zero()) return EpSeq::finite({1});
  if (alpha.is_purely_periodic() && alpha.per().back() < M) {
    EpSeq cand = EpSeq::finite(plus(alpha.per()));
    if (is_greedy_beta(M, cand) && alpha_from_beta(M, cand) == alpha) return cand;
  }
  return alpha;
}

namespace {

// reflect(shift(s,n)) compared with bound at every n ≥ 1 where s_n > 0.
bool reflected_shifts_below(Digit M, const EpSeq& s, const EpSeq& bound, bool strict) {
  for (std::size_t n = 1; n <= window(s); ++n) {
    if (s.at(n - 1) == 0) continue;
    Cmp c = lex_cmp(reflect(shift(s, n), M), bound);
    if (c == Cmp::GT || (strict && c == Cmp::EQ)) return false;
  }
  return true;
}

bool shifts_below(Digit M, const EpSeq& s, const EpSeq& bound, bool strict) {
  for (std::size_t n = 1; n <= window(s); ++n) {
    if (s.at(n - 1) == M) continue;
    Cmp c = lex_cmp(shift(s, n), bound);
    if (c == Cmp::GT || (strict && c == Cmp::EQ)) return false;
  }
  return true;
}

}  // namespace

BaseClass classify_alpha(Digit M, const EpSeq& alpha) {
  if (!is_quasigreedy_alpha(M, alpha))
    throw ValidationError("not a quasi-greedy expansion: " + to_string(alpha));
  if (alpha.is_zero()) return BaseClass::NOT_IN_V;
  EpSeq beta = beta_from_alpha(M, alpha);
  if (reflected_shifts_below(M, beta, beta, true)) return BaseClass::IN_U;
  if (reflected_shifts_below(M, alpha, alpha, true)) return BaseClass::IN_CLOSURE_U_NOT_U;
  if (reflected_shifts_below(M, alpha, alpha, false)) return BaseClass::IN_V_NOT_CLOSURE_U;
  return BaseClass::NOT_IN_V;
}

bool is_unique_expansion_seq(const EpSeq& alpha, const EpSeq& c, Digit M, UniqMode mode) {
  check_alphabet(c, M);
  const bool strict = mode == UniqMode::UNIQUE;
  if (!strict && !c.is_infinite()) return false;
  return shifts_below(M, c, alpha, strict) && reflected_shifts_below(M, c, alpha, strict);
}

}  // namespace univoque
