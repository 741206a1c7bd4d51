#pragma once

#include <stdexcept>
#include <string>

namespace bccst {

enum class Errc {
    ok = 0,
    invalid_arg,
    parse,
    io,
    disconnected,
    too_many_trees,
    payload_too_large,
    no_progress,
    resample_limit,
    sparsifier_degenerate,
    not_normalized,
    check_failed,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bccst
