#include "pathlayout/io.hpp"

#include <fstream>
#include <sstream>

#include "pathlayout/error.hpp"

namespace pathlayout {

namespace {

constexpr std::string_view kBlank = " \t\r\f\v";

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 1;
  while (!text.empty()) {
    auto end = text.find('\n');
    fn(number++, text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

}  // namespace

Dag parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    line = line.substr(0, line.find('#'));
    std::vector<std::string_view> tokens;
    while (true) {
      auto first = line.find_first_not_of(kBlank);
      if (first == std::string_view::npos) break;
      line.remove_prefix(first);
      auto end = line.find_first_of(kBlank);
      tokens.push_back(line.substr(0, end));
      if (end == std::string_view::npos) break;
      line.remove_prefix(end);
    }
    if (tokens.empty()) return;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kMalformedLine, {std::to_string(number)},
                  "expected 'source target', got " + std::to_string(tokens.size()) + " tokens");
    }
    pairs.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
  });
  return build_dag(pairs);
}

std::string write_edge_list(const Dag& g) {
  std::string out = "# n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += g.label(e.source);
    out += ' ';
    out += g.label(e.target);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_path_file(std::string_view text) {
  std::vector<std::vector<std::string>> paths;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    auto& path = paths.emplace_back();
    while (true) {
      auto comma = line.find(',');
      auto token = trim(line.substr(0, comma));
      if (token.empty()) throw Error(ErrorCode::kMalformedLine, {std::to_string(number)}, "empty vertex token");
      path.emplace_back(token);
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
  });
  return paths;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, {path}, "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, {path}, "cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kInvalidArgument, {path}, "write failed");
}

}  // namespace pathlayout
