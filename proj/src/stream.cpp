#include "vcs/stream.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace vcs {

FinalGraph validate_stream(const std::vector<StreamUpdate>& updates, uint32_t n) {
  std::unordered_set<EdgeId> live;
  live.reserve(updates.size());
  for (size_t i = 0; i < updates.size(); i++) {
    const StreamUpdate& up = updates[i];
    size_t pos = i + 1;
    if (up.u >= n || up.v >= n || up.u == up.v)
      throw StreamError(StreamError::Kind::OutOfRange, pos,
                        "update " + std::to_string(pos) + ": endpoints out of range");
    EdgeId id = edge_id(up.u, up.v, n);
    if (up.delta == 1) {
      if (!live.insert(id).second)
        throw StreamError(StreamError::Kind::DuplicateInsert, pos,
                          "update " + std::to_string(pos) + ": insert of live edge");
    } else if (up.delta == -1) {
      if (live.erase(id) == 0)
        throw StreamError(StreamError::Kind::DeleteAbsent, pos,
                          "update " + std::to_string(pos) + ": delete of absent edge");
    } else {
      throw StreamError(StreamError::Kind::OutOfRange, pos,
                        "update " + std::to_string(pos) + ": delta must be +-1");
    }
  }
  FinalGraph g;
  g.n = n;
  g.edges.reserve(live.size());
  for (EdgeId id : live) g.edges.push_back(edge_from_id(id, n));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

StreamFile read_stream(std::istream& in) {
  StreamFile sf;
  std::string line;
  size_t lineno = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    lineno++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_n) {
      uint64_t n;
      if (tok != "n" || !(ls >> n))
        throw StreamError(StreamError::Kind::Parse, lineno, "line " + std::to_string(lineno) + ": expected header 'n <N>'");
      sf.n = static_cast<uint32_t>(n);
      have_n = true;
      continue;
    }
    if (tok != "+" && tok != "-")
      throw StreamError(StreamError::Kind::Parse, lineno, "line " + std::to_string(lineno) + ": expected '+' or '-'");
    uint64_t u, v;
    if (!(ls >> u >> v))
      throw StreamError(StreamError::Kind::Parse, lineno, "line " + std::to_string(lineno) + ": expected two endpoints");
    sf.updates.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                          static_cast<int8_t>(tok == "+" ? 1 : -1)});
  }
  if (!have_n) throw StreamError(StreamError::Kind::Parse, 0, "missing 'n <N>' header");
  return sf;
}

StreamFile read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_stream(in);
}

void write_stream(std::ostream& out, const StreamFile& sf) {
  out << "n " << sf.n << "\n";
  for (const StreamUpdate& up : sf.updates)
    out << (up.delta > 0 ? '+' : '-') << ' ' << up.u << ' ' << up.v << "\n";
}

void write_stream_file(const std::string& path, const StreamFile& sf) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_stream(out, sf);
}

}  // namespace vcs
