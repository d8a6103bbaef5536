#pragma once

#include <stdexcept>
#include <string>

namespace cyw {

enum class errc {
    bad_input,
    index_out_of_range,
    negative_multiplicity,
    cap_exceeded,
    not_a_diagonal,
    not_disjoint,
    wrong_size,
    vertex_not_found,
    degenerate,
    size_limit,
    validation_failure,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_input: return "bad_input";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::negative_multiplicity: return "negative_multiplicity";
        case errc::cap_exceeded: return "cap_exceeded";
        case errc::not_a_diagonal: return "not_a_diagonal";
        case errc::not_disjoint: return "not_disjoint";
        case errc::wrong_size: return "wrong_size";
        case errc::vertex_not_found: return "vertex_not_found";
        case errc::degenerate: return "degenerate";
        case errc::size_limit: return "size_limit";
        case errc::validation_failure: return "validation_failure";
    }
    return "unknown";
}

/// Structured error: code + message + the offending datum, rendered as
/// "code: message [datum]".
class error : public std::runtime_error {
public:
    error(errc code, std::string message, std::string datum = {})
        : std::runtime_error(std::string(errc_name(code)) + ": " + message +
                             (datum.empty() ? "" : " [" + datum + "]")),
          code_(code), message_(std::move(message)), datum_(std::move(datum)) {}

    errc code() const { return code_; }
    const std::string& message() const { return message_; }
    const std::string& datum() const { return datum_; }

    /// Process exit code for the CLI: size limits are exit 3, everything
    /// else is a validation failure, exit 2.
    int exit_code() const { return code_ == errc::size_limit ? 3 : 2; }

private:
    errc code_;
    std::string message_;
    std::string datum_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg, const std::string& datum = {}) {
    throw error(code, msg, datum);
}

} // namespace cyw
