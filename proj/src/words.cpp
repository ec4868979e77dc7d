#include "trimorph/words.hpp"

#include "trimorph/checked.hpp"
#include "trimorph/error.hpp"

namespace trimorph {

Word Word::from_runs(std::span<const Run> runs) {
  Word w;
  for (const Run& r : runs) w.append(r.letter, r.count);
  return w;
}

Word Word::parse(std::string_view text) {
  if (text == "eps") return {};
  if (text.empty()) throw ParseError(0, "empty word (write \"eps\" for the empty word)");
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a': w.append(Letter::A, 1); break;
      case 'b': w.append(Letter::B, 1); break;
      default:
        throw ParseError(i, std::string("letter '") + text[i] + "' outside {a,b}");
    }
  }
  return w;
}

Word& Word::append(Letter x, std::uint64_t count) {
  if (count == 0) return *this;
  const std::uint64_t new_length = checked_add(length_, count);
  const std::uint64_t new_occ = checked_add(occ(x), count);
  if (!runs_.empty() && runs_.back().letter == x) {
    runs_.back().count = checked_add(runs_.back().count, count);
  } else {
    runs_.push_back({x, count});
  }
  length_ = new_length;
  occ_[static_cast<std::size_t>(x)] = new_occ;
  return *this;
}

Word& Word::append(const Word& w) {
  if (&w == this) {
    const Word copy = w;
    return append(copy);
  }
  // Check totals first so a failed append leaves *this untouched.
  checked_add(length_, w.length_);
  if (!runs_.empty() && !w.runs_.empty() && runs_.back().letter == w.runs_.front().letter)
    checked_add(runs_.back().count, w.runs_.front().count);
  for (const Run& r : w.runs_) append(r.letter, r.count);
  return *this;
}

Word Word::repeated(std::uint64_t k) const {
  checked_mul(length_, k);
  Word out;
  for (std::uint64_t i = 0; i < k; ++i) out.append(*this);
  return out;
}

Word Word::prefix(std::uint64_t n) const {
  Word out;
  for (const Run& r : runs_) {
    if (n == 0) break;
    const std::uint64_t take = r.count < n ? r.count : n;
    out.append(r.letter, take);
    n -= take;
  }
  return out;
}

Word Word::prefix_through_b(std::uint64_t k) const {
  Word out;
  for (const Run& r : runs_) {
    if (k == 0) break;
    if (r.letter == Letter::A) {
      out.append(r.letter, r.count);
    } else {
      const std::uint64_t take = r.count < k ? r.count : k;
      out.append(r.letter, take);
      k -= take;
    }
  }
  return out;
}

bool Word::starts_with(const Word& u) const {
  if (u.runs_.size() > runs_.size()) return false;
  for (std::size_t i = 0; i < u.runs_.size(); ++i) {
    const Run& mine = runs_[i];
    const Run& theirs = u.runs_[i];
    if (mine.letter != theirs.letter) return false;
    const bool last = i + 1 == u.runs_.size();
    if (last ? theirs.count > mine.count : theirs.count != mine.count) return false;
  }
  return true;
}

std::string Word::str() const {
  if (runs_.empty()) return "eps";
  std::string s;
  s.reserve(static_cast<std::size_t>(length_));
  for (const Run& r : runs_) s.append(static_cast<std::size_t>(r.count), to_char(r.letter));
  return s;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  return w;
}

Word strip_quotient(const Word& u, const Word& w) {
  if (!w.starts_with(u)) throw NotAPrefix(u.str() + " is not a prefix of " + w.str());
  const auto ur = u.runs();
  const auto wr = w.runs();
  Word v;
  std::size_t i = ur.size();
  if (!ur.empty()) {
    // The last run of u may only partially consume the matching run of w.
    const std::uint64_t rest = wr[i - 1].count - ur[i - 1].count;
    v.append(wr[i - 1].letter, rest);
  }
  for (; i < wr.size(); ++i) v.append(wr[i].letter, wr[i].count);
  return v;
}

BCore b_core(const Word& w) {
  if (w.occ(Letter::B) == 0) return {w.length(), Word{}, 0};
  auto runs = w.runs();
  BCore out;
  std::size_t first = 0;
  std::size_t last = runs.size();
  if (runs.front().letter == Letter::A) out.lead = runs[first++].count;
  if (runs.back().letter == Letter::A) out.trail = runs[--last].count;
  out.core = Word::from_runs(runs.subspan(first, last - first));
  return out;
}

bool words_commute(const Word& u, const Word& v) { return concat(u, v) == concat(v, u); }

}  // namespace trimorph
