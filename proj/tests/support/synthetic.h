#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jointvec/cooccurrence.h"
#include "jointvec/model.h"
#include "jointvec/relations.h"

namespace jointvec::testing {

// Topic-structured corpus of roughly `tokens` tokens: each line draws most
// of its words from one of a handful of topics plus shared function words.
// Every word appears well above the default frequency cut at 10^4 tokens.
std::vector<std::string> toy_corpus(std::uint64_t seed,
                                    std::size_t tokens = 10000);

// Zipf-distributed corpus over `vocab_size` synthetic words, lines of 5-25
// tokens. Used for scaling measurements.
std::vector<std::string> zipf_corpus(std::uint64_t seed, std::size_t tokens,
                                     std::size_t vocab_size);

// Corpus in which "alpha" and "beta" both co-occur with "gamma" but never
// appear in the same line, each surrounded by its own filler words.
std::vector<std::string> shared_context_corpus(std::uint64_t seed);

// Random lines over a small alphabet of words (some deliberately rare, so
// they fall out of the vocabulary), at most `max_tokens` tokens in total.
std::vector<std::string> random_small_corpus(std::uint64_t seed,
                                             std::size_t max_tokens);

std::string join_lines(const std::vector<std::string>& lines);

struct GradientInstance {
  CoocMatrix cooc;
  RelationSet rel;
  Model model;
};

// Random |V| = 10 instance with 1-20 entries and 0-5 relation pairs. Some
// relation pairs deliberately have no co-occurrence entry.
GradientInstance random_gradient_instance(std::uint64_t seed, int dim = 5);

}  // namespace jointvec::testing
