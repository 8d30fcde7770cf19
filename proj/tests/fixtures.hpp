#pragma once

#include <string>

#include "lamseifert/diagram_io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(LAMSEIFERT_DATA_DIR) + "/" + name + ".json"; }

inline lamseifert::io::DiagramDocument load(const std::string& name) {
  return lamseifert::io::parse_document(lamseifert::io::read_file(path(name)));
}

inline lamseifert::ScalarVector ones(std::size_t n) { return lamseifert::ScalarVector(n, lamseifert::Scalar(1)); }

}  // namespace fixtures
