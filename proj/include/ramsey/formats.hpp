#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "family.hpp"
#include "small_graph.hpp"

namespace ramsey {

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace detail

// Family file: a header line `n=<int>`, then one member per line as a hex
// bitmask (optional 0x prefix). Blank lines and lines starting with `#` are
// skipped.
inline SetFamily read_family(std::istream& in) {
    SetFamily f;
    std::string line;
    bool have_header = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = detail::strip(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_header) {
            if (t.rfind("n=", 0) != 0)
                throw UsageError("family file: first line must be n=<int>");
            try {
                f.n = std::stoi(t.substr(2));
            } catch (const std::exception&) {
                throw UsageError("family file: bad ground set size in header");
            }
            have_header = true;
            continue;
        }
        if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) t = t.substr(2);
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v, 16);
        if (ec != std::errc() || p != t.data() + t.size())
            throw UsageError("family file: line " + std::to_string(lineno) +
                             " is not a hex bitmask");
        f.members.push_back(v);
    }
    if (!have_header) throw UsageError("family file: missing n=<int> header");
    f.validate();
    return f;
}

inline SetFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open family file: " + path);
    return read_family(in);
}

inline void write_family(std::ostream& out, const SetFamily& f) {
    out << "n=" << f.n << "\n";
    for (std::uint32_t m : f.members) {
        std::ostringstream h;
        h << std::hex << m;
        out << h.str() << "\n";
    }
}

} // namespace ramsey
