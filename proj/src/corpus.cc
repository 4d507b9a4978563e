// src/corpus.cc

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

#include "fairtrial/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "fairtrial/error.h"
#include "fairtrial/text_io.h"

namespace fairtrial {

std::string_view ToString(Gender gender) {
  switch (gender) {
    case Gender::kMale: return "male";
    case Gender::kFemale: return "female";
    case Gender::kUnknown: return "unknown";
  }
  return "unknown";
}

Gender ParseGender(std::string_view text) {
  std::string g = ToLower(Trim(text));
  if (g == "m" || g == "male") return Gender::kMale;
  if (g == "f" || g == "female") return Gender::kFemale;
  return Gender::kUnknown;
}

std::string GroupKey::ToString() const {
  return std::string(fairtrial::ToString(gender)) + ":" + nationality;
}

std::vector<Speaker> LoadMetadata(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  // Header: first non-blank line.
  while (std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) break;
  }
  if (Trim(line).empty())
    throw Error(ErrorKind::kFormat, "metadata: missing header row");
  const char delim = line.find('\t') != std::string::npos ? '\t' : ',';

  std::vector<std::string_view> header = Split(line, delim);
  auto column = [&](std::string_view name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (ToLower(Trim(header[i])) == name) return i;
    throw Error(ErrorKind::kFormat,
                "metadata: missing required column '" + std::string(name) + "'");
  };
  const std::size_t id_col = column("speaker_id");
  const std::size_t gender_col = column("gender");
  const std::size_t nat_col = column("nationality");
  const std::size_t needed = std::max({id_col, gender_col, nat_col}) + 1;

  std::vector<Speaker> speakers;
  std::set<std::string, std::less<>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> fields = Split(line, delim);
    if (fields.size() < needed)
      throw Error(ErrorKind::kFormat, "metadata line " + std::to_string(line_no) +
                                          ": expected at least " +
                                          std::to_string(needed) + " fields");
    Speaker s;
    s.id = std::string(Trim(fields[id_col]));
    if (s.id.empty())
      throw Error(ErrorKind::kFormat,
                  "metadata line " + std::to_string(line_no) + ": empty speaker_id");
    s.gender = ParseGender(fields[gender_col]);
    s.nationality = ToLower(Trim(fields[nat_col]));
    if (!seen.insert(s.id).second)
      throw Error(ErrorKind::kDuplicateKey, "duplicate speaker_id " + s.id);
    speakers.push_back(std::move(s));
  }
  return speakers;
}

std::vector<Utterance> LoadUtterances(std::istream &in) {
  std::vector<Utterance> utterances;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view path = Trim(line);
    if (path.empty()) continue;
    std::vector<std::string_view> parts = Split(path, '/');
    if (parts.size() < 3)
      throw Error(ErrorKind::kFormat,
                  "utterance list line " + std::to_string(line_no) +
                      ": expected <speaker>/<recording>/<file>, got '" +
                      std::string(path) + "'");
    if (parts[0].empty() || parts[1].empty() || parts.back().empty())
      throw Error(ErrorKind::kFormat, "utterance list line " +
                                          std::to_string(line_no) +
                                          ": empty path segment");
    Utterance u;
    u.id = std::string(path);
    u.speaker_id = std::string(parts[0]);
    u.recording_id = std::string(parts[1]);
    if (!seen.insert(u.id).second)
      throw Error(ErrorKind::kDuplicateKey, "duplicate utterance " + u.id);
    utterances.push_back(std::move(u));
  }
  return utterances;
}

Corpus Corpus::Build(std::vector<Speaker> speakers,
                     std::vector<Utterance> utterances,
                     BuildWarnings *warnings) {
  BuildWarnings local;
  std::sort(speakers.begin(), speakers.end(),
            [](const Speaker &a, const Speaker &b) { return a.id < b.id; });
  for (std::size_t i = 1; i < speakers.size(); ++i)
    if (speakers[i].id == speakers[i - 1].id)
      throw Error(ErrorKind::kDuplicateKey, "duplicate speaker_id " + speakers[i].id);
  std::sort(utterances.begin(), utterances.end(),
            [](const Utterance &a, const Utterance &b) { return a.id < b.id; });
  for (std::size_t i = 1; i < utterances.size(); ++i)
    if (utterances[i].id == utterances[i - 1].id)
      throw Error(ErrorKind::kDuplicateKey, "duplicate utterance " + utterances[i].id);

  std::set<std::string, std::less<>> known;
  for (const Speaker &s : speakers) known.insert(s.id);
  std::set<std::string, std::less<>> voiced;
  std::vector<Utterance> kept;
  kept.reserve(utterances.size());
  for (Utterance &u : utterances) {
    if (!known.count(u.speaker_id)) {
      ++local.dropped_utterances;
      continue;
    }
    voiced.insert(u.speaker_id);
    kept.push_back(std::move(u));
  }

  Corpus corpus;
  for (Speaker &s : speakers) {
    if (!voiced.count(s.id)) {
      ++local.dropped_speakers;
      continue;
    }
    corpus.speaker_index_.emplace(s.id, corpus.speakers_.size());
    corpus.speakers_.push_back(std::move(s));
  }
  if (corpus.speakers_.empty())
    throw Error(ErrorKind::kEmptyCorpus,
                "corpus is empty after joining metadata and utterances");

  corpus.utterances_ = std::move(kept);
  corpus.utterances_by_speaker_.resize(corpus.speakers_.size());
  for (std::size_t i = 0; i < corpus.utterances_.size(); ++i) {
    const Utterance &u = corpus.utterances_[i];
    corpus.utterance_index_.emplace(u.id, i);
    corpus.utterances_by_speaker_[corpus.speaker_index_.at(u.speaker_id)].push_back(i);
  }
  for (const Speaker &s : corpus.speakers_)
    if (s.gradeable())
      corpus.groups_[GroupKey{s.gender, s.nationality}].push_back(s.id);

  if (warnings) *warnings = local;
  return corpus;
}

const Speaker *Corpus::FindSpeaker(std::string_view id) const {
  auto it = speaker_index_.find(std::string(id));
  return it == speaker_index_.end() ? nullptr : &speakers_[it->second];
}

const Utterance *Corpus::FindUtterance(std::string_view id) const {
  auto it = utterance_index_.find(std::string(id));
  return it == utterance_index_.end() ? nullptr : &utterances_[it->second];
}

const Utterance &Corpus::GetUtterance(std::string_view id) const {
  const Utterance *u = FindUtterance(id);
  if (!u)
    throw Error(ErrorKind::kUnresolved, "unknown utterance " + std::string(id));
  return *u;
}

const Speaker &Corpus::GetSpeaker(std::string_view id) const {
  const Speaker *s = FindSpeaker(id);
  if (!s) throw Error(ErrorKind::kUnresolved, "unknown speaker " + std::string(id));
  return *s;
}

const std::vector<std::size_t> &Corpus::UtteranceIndicesOf(
    std::string_view speaker_id) const {
  auto it = speaker_index_.find(std::string(speaker_id));
  if (it == speaker_index_.end())
    throw Error(ErrorKind::kUnresolved, "unknown speaker " + std::string(speaker_id));
  return utterances_by_speaker_[it->second];
}

std::optional<GroupKey> Corpus::GroupOf(std::string_view speaker_id) const {
  const Speaker *s = FindSpeaker(speaker_id);
  if (!s || !s->gradeable()) return std::nullopt;
  return GroupKey{s->gender, s->nationality};
}

std::vector<std::size_t> Corpus::GroupPool(const GroupKey &group,
                                           std::string_view exclude_speaker) const {
  std::vector<std::size_t> pool;
  auto it = groups_.find(group);
  if (it == groups_.end()) return pool;
  for (const std::string &sid : it->second) {
    if (sid == exclude_speaker) continue;
    const auto &own = UtteranceIndicesOf(sid);
    pool.insert(pool.end(), own.begin(), own.end());
  }
  // Utterance indices follow rel_path order already.
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::string Corpus::MetadataText() const {
  std::ostringstream out;
  out << "speaker_id\tgender\tnationality\n";
  for (const Speaker &s : speakers_)
    out << s.id << '\t' << ToString(s.gender) << '\t' << s.nationality << '\n';
  return out.str();
}

std::string Corpus::UtteranceListText() const {
  std::string out;
  for (const Utterance &u : utterances_) {
    out += u.id;
    out += '\n';
  }
  return out;
}

Corpus LoadCorpus(const std::string &meta_path, const std::string &utts_path,
                  BuildWarnings *warnings) {
  std::ifstream meta(meta_path);
  if (!meta) throw Error(ErrorKind::kIo, "cannot open " + meta_path);
  std::ifstream utts(utts_path);
  if (!utts) throw Error(ErrorKind::kIo, "cannot open " + utts_path);
  return Corpus::Build(LoadMetadata(meta), LoadUtterances(utts), warnings);
}

}  // namespace fairtrial
