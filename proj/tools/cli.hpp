#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinberg::cli {

/// args excludes the program name. Returns 0 on success, 2 on usage errors
/// and 1 when the library rejects the input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinberg::cli
