#include "levyvar/core/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace levyvar {

std::string fmt_sig(double x, int significant) {
    // std::to_chars is locale-independent by definition
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, significant);
    return std::string(buf, res.ptr);
}

std::string fmt_full(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_record(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n\r") != std::string::npos) {
            out += '"';
            for (char c : f) {
                out += c;
                if (c == '"') out += '"';
            }
            out += '"';
        } else {
            out += f;
        }
    }
    out += '\n';
    return out;
}

}  // namespace levyvar
