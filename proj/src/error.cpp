#include "rhwarp/error.hpp"

namespace rhwarp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::behind_camera: return "behind_camera";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::non_injective: return "non_injective";
    case ErrorKind::out_of_domain: return "out_of_domain";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace rhwarp
