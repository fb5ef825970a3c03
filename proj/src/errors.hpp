#pragma once

#include <stdexcept>
#include <string>

namespace magnikit {

enum class Err {
    internal = 1,
    bad_parameter,
    parse,
    disconnected,
    bad_endpoint,
    self_loop_contraction,
    edge_not_found,
    would_disconnect,
    self_loop_subdivision,
    arity_mismatch,
    too_large,
    not_a_complex,
    not_a_cycle,
    cap_exceeded,
    grid_too_small,
};

class MkError : public std::runtime_error {
public:
    MkError(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw MkError(code, msg); }

}  // namespace magnikit
