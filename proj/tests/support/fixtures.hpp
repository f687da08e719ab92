#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "katzcyc/io.hpp"

namespace katzcyc::testing {

inline Json load_fixture(const std::string& name) {
    const std::string path = std::string(KATZCYC_FIXTURE_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture " + path);
    return Json::parse(in);
}

}  // namespace katzcyc::testing
