#pragma once

#include <map>
#include <string>
#include <vector>

#include "paralab/kernel.hpp"
#include "paralab/syntax.hpp"

namespace paralab {

struct MatrixCell {
  bool valid = false;
  std::string at;      // first failing label, empty when valid
  std::string reason;  // reason code, empty when valid

  bool operator==(const MatrixCell& o) const {
    return valid == o.valid && at == o.at && reason == o.reason;
  }
  bool operator!=(const MatrixCell& o) const { return !(*this == o); }
};

// One shipped derivation: its exact script text (the same bytes as the
// file under corpus/) and the expected verdict per built-in profile.
struct CorpusEntry {
  std::string name;
  std::string scriptText;
  std::map<std::string, MatrixCell> expected;
};

// liar, liar-up, liar-down, explosion, curry, curry-rc, vcurry.
const std::vector<CorpusEntry>& corpusEntries();
const CorpusEntry* findCorpusEntry(const std::string& name);

// Definition-only documents shipped alongside the proofs.
const std::map<std::string, std::string>& corpusDefinitionFiles();

// Parses an entry's script; throws Error if the shipped text is broken.
Document corpusDocument(const CorpusEntry& entry);

struct MatrixReport {
  std::vector<std::string> proofs;    // row order
  std::vector<std::string> profiles;  // column order
  std::map<std::string, std::map<std::string, MatrixCell>> cells;

  bool operator==(const MatrixReport& o) const {
    return proofs == o.proofs && profiles == o.profiles && cells == o.cells;
  }
};

// Checks every corpus proof under every given profile.
MatrixReport runMatrix(const std::vector<Profile>& profiles);

// The golden table over the five built-in profiles.
MatrixReport expectedMatrix();

}  // namespace paralab
