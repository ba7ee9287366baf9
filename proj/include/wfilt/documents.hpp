#pragma once

#include <map>

#include "wfilt/io.hpp"

namespace wfilt {

// The built-in documents shipped under documents/. Keys are file names; the
// docgen tool writes them and the acceptance suite consumes them.
std::map<std::string, InputDocument> shipped_documents();

}  // namespace wfilt
