#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace treecut {

// Caller violated an operation's precondition (missing vertex, bad bijection...).
class precondition_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file or structurally invalid object.
class validation_error : public std::runtime_error {
   public:
    explicit validation_error(const std::string &what, std::vector<std::string> violations = {})
        : std::runtime_error(what), violations_(std::move(violations)) {}

    const std::vector<std::string> &violations() const { return violations_; }

   private:
    std::vector<std::string> violations_;
};

// Enumeration budget or instance size limit exceeded. Not a mathematical failure.
class budget_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace treecut
