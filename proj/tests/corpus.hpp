#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lamseifert/diagram.hpp"
#include "lamseifert/scalar.hpp"

namespace corpus {

/// Letters of a generalized braid word. Positions count from the left.
struct Letter {
  enum class Kind { Cross, Merge, Split };
  Kind kind = Kind::Cross;
  std::size_t position = 0;
  int sign = 1;  // Cross only: +1 puts the strand moving right on top
};

inline Letter cross(std::size_t i, int sign) { return Letter{Letter::Kind::Cross, i, sign}; }
inline Letter merge(std::size_t i) { return Letter{Letter::Kind::Merge, i, 1}; }
inline Letter split(std::size_t i) { return Letter{Letter::Kind::Split, i, 1}; }

/// Closes the word on the right. The word must end with as many strands as it
/// started with. Switchless components get one marker.
lamseifert::TrainTrackDiagram closure(std::size_t strands, const std::vector<Letter>& word);

/// Random word on 1..max_strands strands, returning to its strand count.
std::vector<Letter> random_word(std::mt19937_64& rng, std::size_t strands, std::size_t length);

/// Positive rational invariant weights: a positive combination of directed
/// cycles covering every segment, or nullopt when the positive cone is empty.
std::optional<lamseifert::ScalarVector> random_positive_weights(const lamseifert::TrainTrackDiagram& d,
                                                                 std::mt19937_64& rng, bool integer);

struct Sample {
  std::string name;
  lamseifert::TrainTrackDiagram diagram;
  lamseifert::ScalarVector weights;
};

/// Deterministic corpus of braid closures with positive weights.
std::vector<Sample> make_corpus(std::size_t count, std::uint64_t seed, bool integer);

}  // namespace corpus
