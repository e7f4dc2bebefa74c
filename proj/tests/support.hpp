#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcat/io.hpp"

namespace support {

inline std::filesystem::path source_dir() { return QCAT_SOURCE_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CorpusEntry {
  std::string file;  // stem, e.g. "sym2"
  std::string text;
  qcat::AnyPresentation algebra;
};

inline std::vector<CorpusEntry> corpus() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(source_dir() / "corpus"))
    if (e.path().extension() == ".qa") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusEntry> out;
  for (const auto& p : paths) {
    auto text = read_file(p);
    out.push_back({p.stem().string(), text, qcat::parse(text)});
  }
  return out;
}

template <class F>
qcat::Presentation<F> load(const std::string& stem) {
  return std::get<qcat::Presentation<F>>(qcat::parse(read_file(source_dir() / "corpus" / (stem + ".qa"))));
}

}  // namespace support
