#include "subsel/point_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace subsel {

namespace {

constexpr std::string_view kMagic = "PSS1";

void append_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t read_u64(std::string_view bytes, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[at + i])) << (8 * i);
  return v;
}

bool is_separator(char c) { return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\r'; }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return std::move(ss).str();
}

}  // namespace

PointFormat parse_point_format(std::string_view name) {
  if (name == "csv") return PointFormat::Csv;
  if (name == "bin") return PointFormat::Binary;
  throw InvalidInput("unknown point format '" + std::string(name) + "' (csv|bin)");
}

std::string to_csv(const PointSet& s) {
  std::string out = "m=" + std::to_string(s.dim()) + "\n";
  out.reserve(out.size() + s.data().size() * 20);
  char buf[32];
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto p = s[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out.push_back(',');
      auto res = std::to_chars(buf, buf + sizeof buf, p[j]);
      out.append(buf, res.ptr);
    }
    out.push_back('\n');
  }
  return out;
}

PointSet parse_points(std::string_view text) {
  std::size_t m = 0;
  bool header = false;
  std::vector<double> data;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t b = 0;
    while (b < line.size() && is_separator(line[b])) ++b;
    line.remove_prefix(b);
    while (!line.empty() && is_separator(line.back())) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("m=")) {
      if (header || !data.empty()) throw InvalidInput("line " + std::to_string(line_no) + ": unexpected header");
      auto digits = line.substr(2);
      auto res = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (res.ec != std::errc() || res.ptr != digits.data() + digits.size() || m < 2)
        throw InvalidInput("line " + std::to_string(line_no) + ": bad header '" + std::string(line) + "'");
      header = true;
      continue;
    }

    std::size_t cols = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      double v = 0;
      auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc() || !std::isfinite(v))
        throw InvalidInput("line " + std::to_string(line_no) + ": malformed value");
      data.push_back(v);
      ++cols;
      p = res.ptr;
      if (p < end && !is_separator(*p))
        throw InvalidInput("line " + std::to_string(line_no) + ": malformed value");
      while (p < end && is_separator(*p)) ++p;
    }
    if (m == 0) m = cols;
    if (cols != m)
      throw InvalidInput("line " + std::to_string(line_no) + ": expected " + std::to_string(m) + " columns, got " +
                         std::to_string(cols));
  }
  if (m == 0) throw InvalidInput("no points and no header: cannot determine dimension");
  return PointSet(m, std::move(data));
}

std::string to_binary(const PointSet& s) {
  std::string out(kMagic);
  append_u64(out, s.dim());
  append_u64(out, s.size());
  out.reserve(out.size() + s.data().size() * 8);
  for (double v : s.data()) append_u64(out, std::bit_cast<std::uint64_t>(v));
  return out;
}

PointSet parse_binary(std::string_view bytes) {
  if (!bytes.starts_with(kMagic) || bytes.size() < 20) throw InvalidInput("not a PSS1 point file");
  std::uint64_t m = read_u64(bytes, 4);
  std::uint64_t n = read_u64(bytes, 12);
  if (m < 2 || m > (1u << 20)) throw InvalidInput("PSS1 header has an invalid dimension");
  if ((bytes.size() - 20) / 8 / m != n || (bytes.size() - 20) != n * m * 8)
    throw InvalidInput("PSS1 payload size does not match its header");
  std::vector<double> data(n * m);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = std::bit_cast<double>(read_u64(bytes, 20 + 8 * i));
  return PointSet(m, std::move(data));
}

void write_points(const PointSet& s, const std::filesystem::path& path, PointFormat format) {
  std::string payload = format == PointFormat::Csv ? to_csv(s) : to_binary(s);
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

PointSet read_points(const std::filesystem::path& path) {
  std::string bytes = slurp(path);
  PointSet s = std::string_view(bytes).starts_with(kMagic) ? parse_binary(bytes) : parse_points(bytes);
  s.set_label(path.stem().string());
  return s;
}

}  // namespace subsel
