// include/fairtrial/corpus.h

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

#ifndef FAIRTRIAL_CORPUS_H_
#define FAIRTRIAL_CORPUS_H_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fairtrial {

enum class Gender { kMale, kFemale, kUnknown };

std::string_view ToString(Gender gender);

/// "m"/"male" and "f"/"female" (any case); everything else is unknown.
Gender ParseGender(std::string_view text);

struct Speaker {
  std::string id;
  Gender gender = Gender::kUnknown;
  std::string nationality;  // lowercased, trimmed

  /// Gender known and nationality non-empty. Only these speakers are
  /// grouped and can take part in graded pairs.
  bool gradeable() const {
    return gender != Gender::kUnknown && !nationality.empty();
  }
};

struct Utterance {
  std::string id;  // the relative path; also the key in trial and score files
  std::string speaker_id;
  std::string recording_id;

  const std::string &rel_path() const { return id; }
};

/// Speaker stratum used for different-speaker pairing and group reports.
struct GroupKey {
  Gender gender = Gender::kUnknown;
  std::string nationality;

  auto operator<=>(const GroupKey &) const = default;
  bool operator==(const GroupKey &) const = default;

  /// "<gender>:<nationality>", e.g. "female:united kingdom".
  std::string ToString() const;
};

/// Reads a comma- or tab-separated metadata table with a header row naming at
/// least speaker_id, gender and nationality. The delimiter is a tab if the
/// header contains one, else a comma.
std::vector<Speaker> LoadMetadata(std::istream &in);

/// Reads one `<speaker_id>/<recording_id>/<file...>` path per line.
std::vector<Utterance> LoadUtterances(std::istream &in);

struct BuildWarnings {
  std::size_t dropped_utterances = 0;  // speaker not in metadata
  std::size_t dropped_speakers = 0;    // no utterances
};

/// Immutable join of speaker metadata and the utterance inventory.
class Corpus {
 public:
  /// Drops orphan utterances and utterance-less speakers (counted in
  /// `warnings`), then indexes gradeable speakers by (gender, nationality).
  /// Throws kEmptyCorpus if nothing survives.
  static Corpus Build(std::vector<Speaker> speakers,
                      std::vector<Utterance> utterances,
                      BuildWarnings *warnings = nullptr);

  /// Sorted by id.
  const std::vector<Speaker> &speakers() const { return speakers_; }
  const std::vector<Utterance> &utterances() const { return utterances_; }
  const std::map<GroupKey, std::vector<std::string>> &groups() const {
    return groups_;
  }

  const Speaker *FindSpeaker(std::string_view id) const;
  const Utterance *FindUtterance(std::string_view id) const;

  /// Throws kUnresolved naming the path.
  const Utterance &GetUtterance(std::string_view id) const;
  const Speaker &GetSpeaker(std::string_view id) const;

  /// Indices into utterances(), sorted by rel_path.
  const std::vector<std::size_t> &UtteranceIndicesOf(std::string_view speaker_id) const;

  std::optional<GroupKey> GroupOf(std::string_view speaker_id) const;

  /// Utterance indices of every speaker in `group` other than
  /// `exclude_speaker`, sorted by rel_path.
  std::vector<std::size_t> GroupPool(const GroupKey &group,
                                     std::string_view exclude_speaker) const;

  /// Serializes back to the two source formats (comma-separated metadata,
  /// one path per line).
  std::string MetadataText() const;
  std::string UtteranceListText() const;

 private:
  std::vector<Speaker> speakers_;
  std::vector<Utterance> utterances_;
  std::unordered_map<std::string, std::size_t> speaker_index_;
  std::unordered_map<std::string, std::size_t> utterance_index_;
  std::vector<std::vector<std::size_t>> utterances_by_speaker_;
  std::map<GroupKey, std::vector<std::string>> groups_;
};

/// Loads and joins metadata and utterance-list files.
Corpus LoadCorpus(const std::string &meta_path, const std::string &utts_path,
                  BuildWarnings *warnings = nullptr);

}  // namespace fairtrial

#endif  // FAIRTRIAL_CORPUS_H_
