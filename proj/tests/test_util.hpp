#ifndef DUVAL_TESTS_TEST_UTIL_HPP
#define DUVAL_TESTS_TEST_UTIL_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "duval/catalog.hpp"

namespace duval::testutil {

inline std::string data_dir() { return DUVAL_DATA_DIR; }

inline const Catalog& shipped_catalog() {
    static const Catalog catalog = load_catalog(data_dir() + "/catalog.json");
    return catalog;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline const CaseRecord& record(const std::string& id) {
    const CaseRecord* rec = shipped_catalog().find_case(id);
    if (!rec) throw Error("test catalog lacks case " + id);
    return *rec;
}

}  // namespace duval::testutil

#endif
