#ifndef QUADDEC_TOOLS_PRETTY_HPP
#define QUADDEC_TOOLS_PRETTY_HPP

#include <string>

#include "quaddec/serialize.hpp"

namespace quaddec::pretty {

// Text renderings of the JSON reports. Each reads only the JSON document, so
// --pretty shows exactly what the plain output carries.

std::string decomposition(const json& j);
std::string studies(const json& j);
std::string verification(const json& j);
std::string moments(const json& j);
std::string families(const json& j);
std::string error(const json& j);

} // namespace quaddec::pretty

#endif
