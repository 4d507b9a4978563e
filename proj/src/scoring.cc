// src/scoring.cc

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

#include "fairtrial/scoring.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <vector>

#include "fairtrial/error.h"
#include "fairtrial/hashing.h"
#include "fairtrial/parallel.h"
#include "fairtrial/text_io.h"

namespace fairtrial {

std::string_view ToString(ScoreSource source) {
  return source == ScoreSource::kSimulated ? "simulated" : "external_file";
}

std::string ScoreSet::Key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  std::string key;
  key.reserve(a.size() + b.size() + 1);
  key.append(a);
  key.push_back('\n');
  key.append(b);
  return key;
}

void ScoreSet::Insert(std::string_view a, std::string_view b, double score) {
  if (!std::isfinite(score))
    throw Error(ErrorKind::kFormat, "non-finite score for " + std::string(a) + " " +
                                        std::string(b));
  auto [it, inserted] = scores_.emplace(Key(a, b), score);
  if (!inserted && it->second != score)
    throw Error(ErrorKind::kConflict, "conflicting scores for pair " + std::string(a) +
                                          " " + std::string(b));
}

std::optional<double> ScoreSet::Score(std::string_view a, std::string_view b) const {
  auto it = scores_.find(Key(a, b));
  if (it == scores_.end()) return std::nullopt;
  return it->second;
}

ScoreSet LoadScores(std::istream &in) {
  ScoreSet scores(ScoreSource::kExternalFile);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    double value = 0.0;
    if (fields.size() != 3)
      throw Error(ErrorKind::kFormat, "score line " + std::to_string(line_no) +
                                          ": expected '<enroll> <test> <score>'");
    if (!ParseDouble(fields[2], &value))
      throw Error(ErrorKind::kFormat, "score line " + std::to_string(line_no) +
                                          ": score is not a finite number");
    scores.Insert(fields[0], fields[1], value);
  }
  return scores;
}

ScoreSet ReadScoreFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return LoadScores(in);
}

std::string FormatScores(const ScoreProvider &scores, std::span<const TrialPair> trials) {
  std::string out;
  for (const TrialPair &t : trials) {
    std::optional<double> s = scores.Score(t.enroll, t.test);
    if (!s)
      throw Error(ErrorKind::kMissingScore, "no score for " + t.enroll + " " + t.test);
    out += t.enroll + ' ' + t.test + ' ' + FormatFixed(*s, 6) + '\n';
  }
  return out;
}

void SimConfig::Validate() const {
  if (embedding_dim < 2)
    throw Error(ErrorKind::kInvalidArgument, "embedding_dim must be at least 2");
  for (double s : {speaker_scale, channel_scale, noise_scale})
    if (!std::isfinite(s) || s < 0.0)
      throw Error(ErrorKind::kInvalidArgument, "simulation scales must be finite and >= 0");
  if (speaker_scale == 0.0)
    throw Error(ErrorKind::kInvalidArgument, "speaker_scale must be positive");
}

Eigen::VectorXd SeededDirection(uint64_t seed, std::string_view key, std::size_t dim) {
  Rng rng(DeriveSeed(seed, key));
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  do {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = StandardNormal(rng);
  } while (v.squaredNorm() == 0.0);
  return v.normalized();
}

SimulatedScorer::SimulatedScorer(const Corpus &corpus, const SimConfig &config,
                                 unsigned threads)
    : corpus_(&corpus), config_(config) {
  config_.Validate();
  const auto &utts = corpus.utterances();
  const std::size_t dim = config_.embedding_dim;
  embeddings_.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(utts.size()));
  ParallelFor(utts.size(), threads, [&](std::size_t i) {
    const Utterance &u = utts[i];
    Eigen::VectorXd v =
        config_.speaker_scale * SeededDirection(config_.seed, "speaker:" + u.speaker_id, dim);
    if (config_.channel_scale > 0.0)
      v += config_.channel_scale *
           SeededDirection(config_.seed, "recording:" + u.recording_id, dim);
    if (config_.noise_scale > 0.0)
      v += config_.noise_scale * SeededDirection(config_.seed, "utterance:" + u.id, dim);
    embeddings_.col(static_cast<Eigen::Index>(i)) = v.normalized();
  });
}

double SimulatedScorer::Cosine(std::size_t a, std::size_t b) const {
  if (a == b) return 1.0;
  if (b < a) std::swap(a, b);
  return embeddings_.col(static_cast<Eigen::Index>(a))
      .dot(embeddings_.col(static_cast<Eigen::Index>(b)));
}

std::optional<double> SimulatedScorer::Score(std::string_view a, std::string_view b) const {
  const Utterance *ua = corpus_->FindUtterance(a);
  const Utterance *ub = corpus_->FindUtterance(b);
  if (!ua || !ub) return std::nullopt;
  const Utterance *base = corpus_->utterances().data();
  return Cosine(static_cast<std::size_t>(ua - base), static_cast<std::size_t>(ub - base));
}

ScoreSet SimulateScores(const Corpus &corpus, std::span<const TrialPair> trials,
                        const SimConfig &config, unsigned threads) {
  SimulatedScorer scorer(corpus, config, threads);
  ScoreSet scores(ScoreSource::kSimulated);
  for (const TrialPair &t : trials) {
    std::optional<double> s = scorer.Score(t.enroll, t.test);
    if (!s)
      throw Error(ErrorKind::kUnresolved,
                  "cannot simulate unresolved pair " + t.enroll + " " + t.test);
    scores.Insert(t.enroll, t.test, *s);
  }
  return scores;
}

}  // namespace fairtrial
