#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <unistd.h>
#include <string>
#include <vector>

#include "hybridtext/corpus.h"
#include "hybridtext/mining.h"
#include "hybridtext/model.h"
#include "hybridtext/preprocess.h"
#include "oracles.h"

namespace fixtures {

// Nine training abstracts in three classes with overlapping vocabulary, and
// three held-out ones. Words appear once, so extraction uses frequency 1.
inline hybridtext::Corpus small_train() {
  hybridtext::Corpus c;
  for (const char* name : {"ALG", "EDE", "AI"}) c.add_class(name);
  c.add_document({"a1", "ALG", "graph tree search path"});
  c.add_document({"a2", "ALG", "graph tree search sort"});
  c.add_document({"a3", "ALG", "graph sort network search"});
  c.add_document({"e1", "EDE", "student teacher test graph"});
  c.add_document({"e2", "EDE", "student teacher school graph"});
  c.add_document({"e3", "EDE", "teacher test school"});
  c.add_document({"i1", "AI", "neural network learn search"});
  c.add_document({"i2", "AI", "neural network learn"});
  c.add_document({"i3", "AI", "network agent learn"});
  return c;
}

inline hybridtext::Corpus small_test() {
  hybridtext::Corpus c;
  for (const char* name : {"ALG", "EDE", "AI"}) c.add_class(name);
  c.add_document({"t1", "ALG", "graph tree student"});
  c.add_document({"t2", "AI", "neural teacher network"});
  c.add_document({"t3", "EDE", "school test graph search"});
  return c;
}

inline hybridtext::PreprocessConfig small_pconf() {
  hybridtext::PreprocessConfig p;
  p.min_in_doc_frequency = 1;
  return p;
}

inline hybridtext::MiningConfig small_mconf() {
  hybridtext::MiningConfig m;
  m.min_support = hybridtext::Rational(2, 9);
  return m;
}

inline std::vector<oracle::Txn> oracle_txns(const std::vector<hybridtext::Transaction>& txns) {
  std::vector<oracle::Txn> out;
  for (const auto& t : txns) out.push_back({t.label, {t.items.begin(), t.items.end()}});
  return out;
}

// Random labeled transactions over items "i0".."i<items-1>".
inline std::vector<hybridtext::Transaction> random_transactions(std::mt19937_64& rng,
                                                                std::size_t count,
                                                                std::size_t items,
                                                                std::size_t classes) {
  std::vector<hybridtext::Transaction> txns(count);
  for (auto& t : txns) {
    t.label = rng() % classes;
    for (std::size_t i = 0; i < items; ++i) {
      if (rng() % 2) t.items.push_back("i" + std::to_string(i));
    }
  }
  return txns;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("hybridtext-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace fixtures
