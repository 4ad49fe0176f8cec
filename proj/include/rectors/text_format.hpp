#pragma once

#include <string>
#include <string_view>

#include "rectors/fincat.hpp"

namespace rectors {

// Line-oriented .fincat reader. Throws Error(Parse) naming the offending line.
RawCategory parse_fincat(std::string_view text);
FinCat read_fincat(std::string_view text, const Limits& limits = {});
FinCat load_fincat(const std::string& path, const Limits& limits = {});
std::string write_fincat(const FinCat& c);

std::string read_file(const std::string& path);

}  // namespace rectors
