#include "harness.hpp"

#include "cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace harness {

Outcome run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"sl2tool"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = sl2::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

TempDir::TempDir() {
    std::random_device rd;
    root_ = std::filesystem::temp_directory_path() / ("sl2-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(root_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(root_, ec);
}

std::string TempDir::path(const std::string& name) const { return (root_ / name).string(); }

std::string TempDir::write(const std::string& name, const sl2::io::Payload& p) const {
    sl2::io::write_file(path(name), p);
    return path(name);
}

std::string TempDir::write_text(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace harness
