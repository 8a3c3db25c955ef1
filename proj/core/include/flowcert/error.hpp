#ifndef FLOWCERT_ERROR_HPP
#define FLOWCERT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flowcert {

/// Malformed or inconsistent input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An oracle was asked to run beyond its size limit.
class SizeGuardError : public InputError {
public:
    using InputError::InputError;
};

/// A computation reached a state its guarantees rule out.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A restricted divergent-tree build found no admissible arc for `vertex`.
class ChoiceUnavailable : public std::runtime_error {
public:
    explicit ChoiceUnavailable(std::uint32_t v)
        : std::runtime_error("no admissible arc pair for vertex " + std::to_string(v))
        , vertex(v) {}

    std::uint32_t vertex;
};

/// The valid-set construction found no qualifying arc for `vertex`.
class NoQualifyingArc : public InternalError {
public:
    explicit NoQualifyingArc(std::uint32_t v)
        : InternalError("no qualifying arc enters vertex " + std::to_string(v))
        , vertex(v) {}

    std::uint32_t vertex;
};

} // namespace flowcert

#endif
