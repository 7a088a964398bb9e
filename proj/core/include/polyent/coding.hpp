#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "polyent/map_system.hpp"
#include "polyent/slope.hpp"

namespace polyent {

struct CodingLetter {
  std::string label;
  std::function<bool(const Point&)> contains;
};

/// A family {Y_1..Y_L} of letters plus the implicit complement letter. Every
/// explicit letter must avoid the declared non-wandering points of the map;
/// maps whose every point is non-wandering admit only the empty family.
class CodingFamily {
 public:
  CodingFamily(const MapSystem& f, std::vector<CodingLetter> letters);

  const std::vector<CodingLetter>& letters() const { return letters_; }
  int alphabet_size() const { return static_cast<int>(letters_.size()) + 1; }

  static constexpr std::uint8_t kInfinity = 0xFF;

 private:
  std::vector<CodingLetter> letters_;
};

using Word = std::vector<std::uint8_t>;

/// All codings of the length-N orbit of x0: letter j at position k when the
/// k-th orbit state lies in letter j, the complement letter otherwise.
/// Overlapping letters branch (each containing letter is a valid coding);
/// disjoint letters give exactly one word. Exceeding branch_cap is a
/// resource error.
std::vector<Word> code_orbit(const MapSystem& f, const Point& x0, int length,
                             const CodingFamily& family,
                             std::size_t branch_cap = 1u << 20);

struct WordCensus {
  std::vector<std::pair<int, long>> counts;  // distinct words per depth
  int alphabet_size = 1;
  SlopeFit slope;
};

/// Distinct-word counts over all starts for every depth in n_list (strictly
/// increasing), with the census slope. A lower-bound proxy for h_pol.
WordCensus word_census(const MapSystem& f, std::span<const Point> starts,
                       std::span<const int> n_list, const CodingFamily& family,
                       double window = 0.5);

/// Interval/arc letter [lo, hi] on the first coordinate of a state.
CodingLetter band_letter(const std::string& label, double lo, double hi,
                         int coord = 0);

}  // namespace polyent
