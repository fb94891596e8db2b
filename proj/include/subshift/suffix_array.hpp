#pragma once

#include <cstdint>
#include <vector>

namespace subshift {

// SA-IS over integer symbols in [0, upper].  Suffixes compare lexicographically, a proper
// prefix sorting first.
std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& s, std::int32_t upper);

// Kasai: result[i] = lcp(suffix sa[i-1], suffix sa[i]), result[0] = 0.
std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s, const std::vector<std::int32_t>& sa);

}  // namespace subshift
