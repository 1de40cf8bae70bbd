#include "trn/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trn {
namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
  raise(Errc::parse_error, what + " (at byte " + std::to_string(pos) + ")");
}

std::size_t words_per_row(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

// Validates tournament-hood of decoded row bits once per record.
Tournament rows_to_tournament(int n, const std::vector<std::uint64_t>& rows) {
  auto bit = [&](int u, int v) -> bool {
    return (rows[static_cast<std::size_t>(u) * words_per_row(n) +
                 (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) &
           1u;
  };
  for (int u = 0; u < n; ++u) {
    if (bit(u, u)) {
      raise(Errc::diagonal_set, "vertex " + std::to_string(u) + " dominates itself");
    }
    for (int v = u + 1; v < n; ++v) {
      if (bit(u, v) == bit(v, u)) {
        raise(Errc::not_antisymmetric_complete,
              "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") is not oriented exactly one way");
      }
    }
  }
  return detail::make_unchecked(n, rows);
}

}  // namespace

std::string encode_trn(const Tournament& t) {
  const int n = t.size();
  std::string out = "TRN " + std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1));
  for (int u = 0; u < n; ++u) {
    auto row = t.row_words(u);
    for (int v = 0; v < n; ++v) {
      out.push_back(((row[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

Tournament decode_trn(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, 4) != "TRN ") parse_fail("expected 'TRN <n>' header", 0);
  pos = 4;
  if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
    parse_fail("expected vertex count after 'TRN '", pos);
  }
  long n_long = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    n_long = n_long * 10 + (text[pos] - '0');
    if (n_long > 1000000) parse_fail("vertex count out of range", pos);
    ++pos;
  }
  if (pos >= text.size() || text[pos] != '\n') parse_fail("expected LF after header", pos);
  ++pos;
  const int n = static_cast<int>(n_long);

  const std::size_t wpr = words_per_row(n);
  std::vector<std::uint64_t> rows(wpr * static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v, ++pos) {
      if (pos >= text.size()) parse_fail("truncated row " + std::to_string(u), pos);
      const char c = text[pos];
      if (c != '0' && c != '1') {
        parse_fail(std::string("unexpected character '") + c + "' in row " + std::to_string(u),
                   pos);
      }
      if (c == '1') {
        rows[static_cast<std::size_t>(u) * wpr + (static_cast<std::size_t>(v) >> 6)] |=
            std::uint64_t{1} << (v & 63);
      }
    }
    if (pos >= text.size() || text[pos] != '\n') {
      parse_fail("expected LF after row " + std::to_string(u), pos);
    }
    ++pos;
  }
  if (pos != text.size()) parse_fail("trailing bytes after final row", pos);
  return rows_to_tournament(n, rows);
}

namespace {

void append_d6_number(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    raise(Errc::too_large, "digraph6 encoding limited to 258047 vertices");
  }
}

long read_d6_number(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) parse_fail("truncated digraph6 size", pos);
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c == 126) {
    if (pos + 3 >= s.size()) parse_fail("truncated digraph6 size", pos);
    if (static_cast<unsigned char>(s[pos + 1]) == 126) {
      parse_fail("digraph6 sizes above 258047 are not supported", pos);
    }
    long n = 0;
    for (int i = 1; i <= 3; ++i) {
      unsigned char d = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(i)]);
      if (d < 63 || d > 126) parse_fail("invalid digraph6 size byte", pos + i);
      n = (n << 6) | (d - 63);
    }
    pos += 4;
    return n;
  }
  if (c < 63 || c > 125) parse_fail("invalid digraph6 size byte", pos);
  ++pos;
  return c - 63;
}

}  // namespace

std::string encode_digraph6(const Tournament& t) {
  const int n = t.size();
  std::string out = "&";
  append_d6_number(out, n);
  const long bits = static_cast<long>(n) * n;
  int group = 0;
  int filled = 0;
  for (long b = 0; b < bits; ++b) {
    const int u = static_cast<int>(b / n);
    const int v = static_cast<int>(b % n);
    group = (group << 1) | (u != v && t.dominates(u, v) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + 63));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Tournament decode_digraph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.compare(0, 12, ">>digraph6<<") == 0) pos = 12;
  if (pos >= line.size() || line[pos] != '&') parse_fail("expected '&' digraph6 prefix", pos);
  ++pos;
  const long n_long = read_d6_number(line, pos);
  if (n_long > 1000000) parse_fail("vertex count out of range", pos);
  const int n = static_cast<int>(n_long);
  const long bits = static_cast<long>(n) * n;
  const long need = (bits + 5) / 6;
  if (static_cast<long>(line.size() - pos) < need) parse_fail("truncated digraph6 bits", pos);
  if (static_cast<long>(line.size() - pos) > need) parse_fail("trailing bytes after digraph6 bits", pos + need);

  const std::size_t wpr = words_per_row(n);
  std::vector<std::uint64_t> rows(wpr * static_cast<std::size_t>(n), 0);
  long b = 0;
  for (long g = 0; g < need; ++g) {
    unsigned char c = static_cast<unsigned char>(line[pos + static_cast<std::size_t>(g)]);
    if (c < 63 || c > 126) parse_fail("invalid digraph6 data byte", pos + g);
    const int val = c - 63;
    for (int i = 5; i >= 0 && b < bits; --i, ++b) {
      if ((val >> i) & 1) {
        const int u = static_cast<int>(b / n);
        const int v = static_cast<int>(b % n);
        rows[static_cast<std::size_t>(u) * wpr + (static_cast<std::size_t>(v) >> 6)] |=
            std::uint64_t{1} << (v & 63);
      }
    }
    // Padding bits in the final group must be zero.
    if (b >= bits) {
      const int pad = static_cast<int>(6 * (g + 1) - bits);
      if (pad > 0 && (val & ((1 << pad) - 1))) {
        parse_fail("nonzero padding in digraph6 bits", pos + g);
      }
    }
  }
  return rows_to_tournament(n, rows);
}

std::optional<Tournament> TournamentReader::next() {
  std::string line;
  // Skip blank lines and an optional format header between records.
  for (;;) {
    if (!std::getline(in_, line)) return std::nullopt;
    if (line.empty() || line == ">>digraph6<<") continue;
    break;
  }
  const long record = index_++;
  try {
    if (line.rfind("TRN ", 0) == 0) {
      int n = 0;
      try {
        std::size_t idx = 0;
        n = std::stoi(line.substr(4), &idx);
        if (n < 0 || 4 + idx != line.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        raise(Errc::parse_error, "bad TRN header");
      }
      std::string text = line + "\n";
      for (int u = 0; u < n; ++u) {
        std::string row;
        if (!std::getline(in_, row)) raise(Errc::parse_error, "truncated TRN record");
        text += row + "\n";
      }
      return decode_trn(text);
    }
    if (!line.empty() && line[0] == '&') return decode_digraph6(line);
    raise(Errc::parse_error, "unrecognized record format");
  } catch (const Error& e) {
    if (e.code() == Errc::diagonal_set || e.code() == Errc::not_antisymmetric_complete) {
      raise(Errc::not_a_tournament,
            "record " + std::to_string(record) + " is not a tournament: " + e.what());
    }
    raise(Errc::parse_error, "record " + std::to_string(record) + ": " + e.what());
  }
}

}  // namespace trn
