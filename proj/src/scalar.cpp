#include "fpa/scalar.hpp"

#include "fpa/error.hpp"

namespace fpa {

std::string to_string(const Scalar& s) {
    return s.get_str();
}

Scalar scalar_from_string(const std::string& text) {
    Scalar s;
    if (s.set_str(text, 10) != 0) throw Error("malformed rational: " + text);
    s.canonicalize();
    return s;
}

} // namespace fpa
