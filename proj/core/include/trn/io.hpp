#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "trn/tournament.hpp"

namespace trn {

// TRN v1: line "TRN <n>", then n rows of n characters from {0,1} where
// character j of row i is 1 iff i -> j. LF line endings, zero diagonal.
std::string encode_trn(const Tournament& t);
Tournament decode_trn(std::string_view text);

// digraph6: '&', then the vertex count, then the n*n adjacency bits in
// row-major order, six bits per printable character. Only records that
// validate as tournaments are accepted.
std::string encode_digraph6(const Tournament& t);
Tournament decode_digraph6(std::string_view line);

enum class FileFormat { trn, digraph6 };

/// Pulls a sequence of tournaments out of a stream. Formats are detected per
/// record, so TRN blocks and digraph6 lines may be mixed. Parse failures
/// throw with the record index in the message.
class TournamentReader {
 public:
  explicit TournamentReader(std::istream& in) : in_(in) {}

  /// Reads the next record. Returns std::nullopt at end of input.
  std::optional<Tournament> next();

  /// Index of the record that next() would produce.
  long index() const { return index_; }

 private:
  std::istream& in_;
  long index_ = 0;
};

}  // namespace trn
