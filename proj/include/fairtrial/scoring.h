// include/fairtrial/scoring.h

// Copyright 2026  The fairtrial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRTRIAL_SCORING_H_
#define FAIRTRIAL_SCORING_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include <Eigen/Dense>

#include "fairtrial/corpus.h"
#include "fairtrial/trials.h"

namespace fairtrial {

/// Anything that can score an unordered utterance pair. Scores are
/// similarities: higher means more likely the same speaker. Distance-like
/// system outputs must be negated before they get here.
class ScoreProvider {
 public:
  virtual ~ScoreProvider() = default;
  /// nullopt when the pair has no score.
  virtual std::optional<double> Score(std::string_view a, std::string_view b) const = 0;
};

enum class ScoreSource { kExternalFile, kSimulated };

std::string_view ToString(ScoreSource source);

/// Scores keyed by unordered (enroll, test) pair.
class ScoreSet : public ScoreProvider {
 public:
  explicit ScoreSet(ScoreSource source = ScoreSource::kExternalFile) : source_(source) {}

  /// Re-inserting a pair with the identical score is a no-op; any other
  /// value throws kConflict naming the pair.
  void Insert(std::string_view a, std::string_view b, double score);

  std::optional<double> Score(std::string_view a, std::string_view b) const override;

  std::size_t size() const { return scores_.size(); }
  ScoreSource source() const { return source_; }

 private:
  static std::string Key(std::string_view a, std::string_view b);

  ScoreSource source_;
  std::unordered_map<std::string, double> scores_;
};

/// Reads `<enroll> <test> <score>` lines. Throws kFormat with the line
/// number on a malformed line or non-numeric score.
ScoreSet LoadScores(std::istream &in);
ScoreSet ReadScoreFile(const std::string &path);

/// Writes one line per trial, in trial order, with 6 decimal places.
/// Throws kMissingScore if a trial is unscored.
std::string FormatScores(const ScoreProvider &scores, std::span<const TrialPair> trials);

struct SimConfig {
  std::size_t embedding_dim = 64;
  double speaker_scale = 1.0;
  double channel_scale = 1.0;
  double noise_scale = 0.7;
  uint64_t seed = 0;

  /// Throws kInvalidArgument on dim < 2, negative or non-finite scales, or
  /// a zero speaker scale.
  void Validate() const;
};

/// Synthetic embedding scorer standing in for a real system.
///
/// Every speaker has a unit latent direction, every recording a unit
/// channel direction, every utterance a unit noise direction, each drawn
/// from a Gaussian stream seeded by (config.seed, entity id). An utterance
/// embeds as
///
///   speaker_scale * latent + channel_scale * channel + noise_scale * noise
///
/// and a pair scores the cosine of the two embeddings. Pairs that share a
/// recording share its channel term, which is what makes within-recording
/// same-speaker pairs easier than cross-recording ones. Gender and
/// nationality have no acoustic correlate here.
class SimulatedScorer : public ScoreProvider {
 public:
  SimulatedScorer(const Corpus &corpus, const SimConfig &config, unsigned threads = 0);

  std::optional<double> Score(std::string_view a, std::string_view b) const override;

  /// Cosine between two utterances by index into corpus.utterances().
  double Cosine(std::size_t a, std::size_t b) const;

  /// Unit-norm embedding columns, one per corpus utterance.
  const Eigen::MatrixXd &embeddings() const { return embeddings_; }

  const SimConfig &config() const { return config_; }

 private:
  const Corpus *corpus_;
  SimConfig config_;
  Eigen::MatrixXd embeddings_;
};

/// Unit-norm Gaussian direction from a stream seeded by (seed, key).
Eigen::VectorXd SeededDirection(uint64_t seed, std::string_view key, std::size_t dim);

/// Scores every trial with a SimulatedScorer. Throws kUnresolved naming the
/// first pair whose utterances are not in the corpus.
ScoreSet SimulateScores(const Corpus &corpus, std::span<const TrialPair> trials,
                        const SimConfig &config, unsigned threads = 0);

}  // namespace fairtrial

#endif  // FAIRTRIAL_SCORING_H_
