#pragma once

#include <stdexcept>
#include <string>

namespace rcl {

enum class Errc {
  ok = 0,
  degree_mismatch,
  invalid_permutation,
  group_too_large,
  not_a_subgroup,
  parent_mismatch,
  invalid_root_pair,
  invalid_extension_pair,
  not_an_extension,
  bad_parameter,
  bad_ordering,
  degree_too_small,
  parse_error,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rcl
