#pragma once

#include <string>
#include <vector>

namespace isoparam::verify {

enum class DumpFormat { json, csv };

// Targets: "Z n", "kac n", "Q n [j]", "system n", "bowl n H",
// "profile family n H y0 s0 s1". Throws PreconditionError on a bad target.
std::string dump(const std::vector<std::string>& target, DumpFormat format);

}  // namespace isoparam::verify
