#pragma once

#include <stdexcept>
#include <string>

namespace bp {

// Exit-code mapping lives in the CLI; the library only distinguishes kinds.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& m) : std::runtime_error(m) {}
};

struct invalid_input_error : std::runtime_error {
    explicit invalid_input_error(const std::string& m) : std::runtime_error(m) {}
};

struct dimension_error : std::runtime_error {
    explicit dimension_error(const std::string& m) : std::runtime_error(m) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

struct scale_error : std::runtime_error {
    explicit scale_error(const std::string& m) : std::runtime_error(m) {}
};

struct unbounded_search_error : std::runtime_error {
    explicit unbounded_search_error(const std::string& m) : std::runtime_error(m) {}
};

struct numerical_failure : std::runtime_error {
    explicit numerical_failure(const std::string& m) : std::runtime_error(m) {}
};

} // namespace bp
