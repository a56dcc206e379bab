#ifndef HK_ERRORS_HPP
#define HK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hk {

struct MalformedDiagram : std::runtime_error {
    explicit MalformedDiagram(const std::string& m) : std::runtime_error(m) {}
};

struct StrutPresent : std::runtime_error {
    explicit StrutPresent(const std::string& m) : std::runtime_error(m) {}
};

struct BidegreeMismatch : std::runtime_error {
    explicit BidegreeMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidLabelling : std::runtime_error {
    explicit InvalidLabelling(const std::string& m) : std::runtime_error(m) {}
};

struct ContextIncomplete : std::runtime_error {
    explicit ContextIncomplete(const std::string& m) : std::runtime_error(m) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& m) : std::runtime_error(m) {}
};

struct UnsupportedDiagram : std::runtime_error {
    explicit UnsupportedDiagram(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidFamilyDimension : std::runtime_error {
    explicit InvalidFamilyDimension(const std::string& m) : std::runtime_error(m) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& m) : std::runtime_error(m) {}
};

} // namespace hk

#endif
