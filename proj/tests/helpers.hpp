#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "lcanet/io.hpp"
#include "lcanet/relation.hpp"

namespace testutil {

inline lcanet::Pair P(const lcanet::LeafSet& leaves, const std::string& a,
                      const std::string& b) {
    return lcanet::Pair(leaves.id(a), leaves.id(b));
}

inline lcanet::Relation rel_from(const std::string& text,
                                 const std::string& separator = "<") {
    std::istringstream in(text);
    return lcanet::parse_constraints(in, "<test>", separator);
}

inline lcanet::Dag dag_from(const std::string& text) {
    std::istringstream in(text);
    return lcanet::parse_dag(in, "<test>");
}

// Materializes contents under a process-unique name and removes the file on
// scope exit.  Names must be distinct within one binary; tests in a suite run
// sequentially, so a plain label suffices.
struct TempFile {
    std::filesystem::path path;

    TempFile(const std::string& label, const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("lcanet_" + std::to_string(::getpid()) + "_" + label);
        std::ofstream out(path);
        out << contents;
    }

    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }

    std::string str() const { return path.string(); }
};

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.exit_code = lcanet::run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace testutil
