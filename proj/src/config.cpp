#include "qsv/config.hpp"

#include <cstdlib>
#include <string>

namespace qsv {

Caps default_caps() { return Caps{}; }

int effective_cap(int cap) {
  const char* env = std::getenv("QSV_CAP_OVERRIDE");
  if (env == nullptr || *env == '\0') return cap;
  try {
    return std::stoi(env);
  } catch (...) {
    return cap;  // unparsable override is ignored rather than fatal
  }
}

}  // namespace qsv
