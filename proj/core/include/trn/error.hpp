#pragma once

#include <stdexcept>
#include <string>

namespace trn {

// Every precondition violation raised by the library carries one of these
// codes, so callers and tests can match on the cause instead of parsing
// the message text.
enum class Errc {
  diagonal_set,
  not_antisymmetric_complete,
  vertex_out_of_range,
  empty_tournament,
  overlapping_sets,
  requirement_exceeds_degree,
  not_strongly_connected,
  too_small,
  too_large,
  length_out_of_range,
  spec_invalid,
  bad_offset_set,
  infeasible,
  parse_error,
  not_a_tournament,
  arg_out_of_range,
  unknown_entry,
  source_unavailable,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace trn
