#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hybridtext/model.h"

namespace hybridtext {

// Line-oriented UTF-8 text format:
//
//   format_version: 1
//   [classes]     one class name per line, registry order
//   [config]      key: value preprocessing and mining settings
//   [stopwords]   one stopword per line
//   [sets]        items<TAB>per-class counts
//   [priors]      class<TAB>num/den<TAB>decimal
//   [table]       items<TAB>num/den per class<TAB>decimals per class
//
// Rationals are written exactly, so reloading reproduces every decision.
void write_model(const Model& model, std::ostream& out);
std::string serialize_model(const Model& model);

// Throws ModelFormatError on a malformed file, an unknown format version, or
// a table that disagrees with the stored counts.
Model read_model(std::istream& in);

// Writes through a temporary file so a failed save leaves no partial model.
void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace hybridtext
