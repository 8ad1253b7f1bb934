#pragma once

#include "sl2/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace harness {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args);

class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string path(const std::string& name) const;
    std::string write(const std::string& name, const sl2::io::Payload& p) const;
    std::string write_text(const std::string& name, const std::string& text) const;

private:
    std::filesystem::path root_;
};

std::string read_text(const std::string& path);

}  // namespace harness
