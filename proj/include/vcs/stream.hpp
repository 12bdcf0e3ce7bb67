#pragma once
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcs/edge.hpp"

namespace vcs {

// Raised on malformed streams; position is the 1-based index of the
// offending update (or input line for parse errors).
class StreamError : public std::runtime_error {
 public:
  enum class Kind { DeleteAbsent, DuplicateInsert, OutOfRange, Parse };

  StreamError(Kind kind, size_t position, const std::string& what)
      : std::runtime_error(what), kind(kind), position(position) {}

  Kind kind;
  size_t position;
};

// Replays the stream, enforcing that every edge multiplicity stays in {0,1}
// at all times, and returns the surviving edge set.
FinalGraph validate_stream(const std::vector<StreamUpdate>& updates, uint32_t n);

struct StreamFile {
  uint32_t n = 0;
  std::vector<StreamUpdate> updates;
};

// Text format: first line "n <N>", then one "+ <u> <v>" or "- <u> <v>" per
// line; '#' starts a comment, blank lines are skipped.
StreamFile read_stream(std::istream& in);
StreamFile read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const StreamFile& sf);
void write_stream_file(const std::string& path, const StreamFile& sf);

}  // namespace vcs
