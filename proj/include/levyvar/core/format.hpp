#pragma once

#include <string>
#include <vector>

namespace levyvar {

// Locale-independent numeric formatting.
std::string fmt_sig(double x, int significant = 12);  // %.{n}g style
std::string fmt_full(double x);                       // round-trip exact (%.17g style)

// One RFC 4180 CSV record: fields quoted when they contain comma, quote or newline.
std::string csv_record(const std::vector<std::string>& fields);

}  // namespace levyvar
