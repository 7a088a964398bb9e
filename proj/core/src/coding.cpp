#include "polyent/coding.hpp"

#include <unordered_set>

#include "polyent/errors.hpp"

namespace polyent {

CodingFamily::CodingFamily(const MapSystem& f,
                           std::vector<CodingLetter> letters) {
  if (!letters.empty() && f.all_nonwandering)
    throw input_error("coding letters must avoid NW(f), and every point of '" +
                      f.label + "' is non-wandering");
  if (letters.size() >= kInfinity)
    throw input_error("too many coding letters");
  for (const auto& letter : letters)
    for (const auto& p : f.declared_fixed)
      if (letter.contains(p))
        throw input_error("coding letter '" + letter.label +
                          "' contains a declared non-wandering point");
  letters_ = std::move(letters);
}

std::vector<Word> code_orbit(const MapSystem& f, const Point& x0, int length,
                             const CodingFamily& family,
                             std::size_t branch_cap) {
  if (length < 1) throw input_error("coding length must be >= 1");
  // letters containing each orbit state; empty slot = the complement letter
  std::vector<std::vector<std::uint8_t>> options(length);
  Point x = x0;
  for (int k = 0; k < length; ++k) {
    for (std::size_t j = 0; j < family.letters().size(); ++j)
      if (family.letters()[j].contains(x))
        options[k].push_back(static_cast<std::uint8_t>(j));
    if (options[k].empty()) options[k].push_back(CodingFamily::kInfinity);
    if (k + 1 < length) x = f.forward(x);
  }
  std::size_t total = 1;
  for (const auto& opt : options) {
    total *= opt.size();
    if (total > branch_cap)
      throw resource_error("orbit coding branches exceed the cap", total);
  }
  std::vector<Word> words;
  words.reserve(total);
  Word w(length, CodingFamily::kInfinity);
  std::vector<std::size_t> pick(length, 0);
  while (true) {
    for (int k = 0; k < length; ++k) w[k] = options[k][pick[k]];
    words.push_back(w);
    int pos = length - 1;
    while (pos >= 0 && pick[pos] + 1 == options[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return words;
}

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto b : w) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

WordCensus word_census(const MapSystem& f, std::span<const Point> starts,
                       std::span<const int> n_list, const CodingFamily& family,
                       double window) {
  if (n_list.empty()) throw input_error("word census needs depths");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw input_error("census depths must be strictly increasing");
  const int nmax = n_list.back();

  // letter options along every orbit once, then count distinct prefixes
  WordCensus census;
  census.alphabet_size = family.alphabet_size();
  std::vector<std::unordered_set<Word, WordHash>> seen(n_list.size());
  std::vector<std::vector<std::uint8_t>> options(nmax);
  for (const auto& start : starts) {
    Point x = start;
    for (int k = 0; k < nmax; ++k) {
      options[k].clear();
      for (std::size_t j = 0; j < family.letters().size(); ++j)
        if (family.letters()[j].contains(x))
          options[k].push_back(static_cast<std::uint8_t>(j));
      if (options[k].empty()) options[k].push_back(CodingFamily::kInfinity);
      if (k + 1 < nmax) x = f.forward(x);
    }
    for (std::size_t d = 0; d < n_list.size(); ++d) {
      const int n = n_list[d];
      std::size_t branches = 1;
      for (int k = 0; k < n; ++k) branches *= options[k].size();
      if (branches > (1u << 20))
        throw resource_error("word census branches exceed the cap", branches);
      Word w(n, CodingFamily::kInfinity);
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        for (int k = 0; k < n; ++k) w[k] = options[k][pick[k]];
        seen[d].insert(w);
        int pos = n - 1;
        while (pos >= 0 && pick[pos] + 1 == options[pos].size())
          pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
      }
    }
  }
  for (std::size_t d = 0; d < n_list.size(); ++d)
    census.counts.emplace_back(n_list[d],
                               static_cast<long>(seen[d].size()));
  census.slope = census.counts.size() >= 3
                     ? slope_fit(census.counts, window)
                     : SlopeFit{};
  return census;
}

CodingLetter band_letter(const std::string& label, double lo, double hi,
                         int coord) {
  return CodingLetter{label, [lo, hi, coord](const Point& p) {
                        return p[coord] >= lo && p[coord] <= hi;
                      }};
}

}  // namespace polyent
