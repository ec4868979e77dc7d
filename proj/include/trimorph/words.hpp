#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trimorph {

/// The binary alphabet, ordered A < B.
enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter other(Letter x) noexcept { return x == Letter::A ? Letter::B : Letter::A; }
constexpr char to_char(Letter x) noexcept { return x == Letter::A ? 'a' : 'b'; }

struct Run {
  Letter letter;
  std::uint64_t count;

  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Finite word over {a,b} in run-length normal form.
///
/// Adjacent runs always carry distinct letters and every count is positive,
/// so two words are equal exactly when their run sequences are equal. The
/// empty run sequence is the empty word. Length and letter counts are cached
/// and kept exact; any 64-bit overflow throws CountOverflow.
class Word {
 public:
  Word() = default;
  Word(Letter x, std::uint64_t count) { append(x, count); }

  /// Normalizes: zero counts are dropped and equal neighbours merged.
  static Word from_runs(std::span<const Run> runs);

  /// Nonempty string over {a,b}, or "eps". Throws ParseError.
  static Word parse(std::string_view text);

  std::span<const Run> runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }
  std::uint64_t length() const noexcept { return length_; }
  std::uint64_t occ(Letter x) const noexcept { return occ_[static_cast<std::size_t>(x)]; }

  /// True when every letter is x; the empty word is in every x^*.
  bool in_star(Letter x) const noexcept { return occ(other(x)) == 0; }

  Word& append(Letter x, std::uint64_t count);
  Word& append(const Word& w);

  Word repeated(std::uint64_t k) const;
  Word prefix(std::uint64_t n) const;
  /// Shortest prefix containing k occurrences of b (the whole word if it has fewer).
  Word prefix_through_b(std::uint64_t k) const;
  bool starts_with(const Word& u) const;

  /// Letter-by-letter text, "eps" for the empty word.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& x, const Word& y) { return x.runs_ <=> y.runs_; }

 private:
  std::vector<Run> runs_;
  std::uint64_t length_ = 0;
  std::array<std::uint64_t, 2> occ_{};
};

Word concat(const Word& u, const Word& v);

/// v with u·v = w. Throws NotAPrefix.
Word strip_quotient(const Word& u, const Word& w);

/// w = a^lead · core · a^trail with core empty or running from the first b to the last b.
struct BCore {
  std::uint64_t lead = 0;
  Word core;
  std::uint64_t trail = 0;

  friend bool operator==(const BCore&, const BCore&) = default;
};

BCore b_core(const Word& w);

bool words_commute(const Word& u, const Word& v);

}  // namespace trimorph
