#pragma once

#include <stdexcept>
#include <string>

namespace sqt {

enum class Errc {
    invalid_argument = 1,
    parse = 2,
    precondition = 3,
    resource = 4,
    not_found = 5,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sqt
