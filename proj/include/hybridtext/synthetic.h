#pragma once

#include <cstddef>
#include <cstdint>

#include "hybridtext/corpus.h"

namespace hybridtext {

// Corpus whose classes use disjoint keyword vocabularies. Every document of
// a class repeats the class's two anchor words and two of its four topic
// words; filler stopwords and once-only noise words are shared across
// classes and never survive keyword extraction with the default config.
// Supports up to 4 classes.
Corpus generate_separable_corpus(std::size_t docs_per_class, std::uint64_t seed,
                                 std::size_t class_count = 3);

}  // namespace hybridtext
