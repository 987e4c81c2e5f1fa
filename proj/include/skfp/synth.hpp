#pragma once

#include <cstdint>
#include <filesystem>

#include "skfp/corpus.hpp"
#include "skfp/eval.hpp"

namespace skfp {

/// Parameters for the deterministic synthetic corpus generator. The
/// generated documents use pronounceable nonsense words drawn from disjoint
/// vocabulary pools: per-family confidential topic words, non-confidential
/// topic words, shared filler, and a shared boilerplate signature that also
/// appears in a slice of the non-confidential documents (the classic
/// standard-content false-alarm source). The thesaurus fully covers the
/// vocabulary of some confidential families and none of the others, so
/// synonym rephrasing defeats contiguous n-grams on part of the corpus while
/// skip-grams still bridge the substitutions.
struct SynthParams {
  std::size_t confidential_docs = 70;
  std::size_t non_confidential_docs = 220;
  std::size_t clusters = 6;             // clustered variant (scenario 3)
  std::size_t passages_per_cluster = 8;
};

struct SyntheticData {
  Corpus corpus;
  Thesaurus thesaurus;
  ClusteredCorpus clustered;
};

/// Same params + seed => byte-identical output, on every platform.
SyntheticData generate_synthetic(const SynthParams& params, std::uint64_t seed);

/// Writes corpus layout + thesaurus.txt + clustered/ under `root`.
void write_synthetic(const SyntheticData& data, const std::filesystem::path& root);

}  // namespace skfp
