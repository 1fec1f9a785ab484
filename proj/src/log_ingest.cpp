#include "log_ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pagecast {

namespace {

bool parse_int(std::string_view text, long long &out) {
  if (text.empty())
    return false;
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

bool is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year))
    return 29;
  return lengths[month - 1];
}

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 + static_cast<unsigned>(d) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int &y, int &m, int &d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

int month_from_abbrev(std::string_view name) {
  static constexpr std::array<std::string_view, 12> names = {
      "Jan", "Feb", "Mar", "Apr", "May", "Jun",
      "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name)
      return static_cast<int>(i) + 1;
  return 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(const std::string &what) {
  throw Error(ErrorCode::Parse, what);
}

std::optional<std::string> optional_field(std::string_view f) {
  if (f.empty() || f == "-")
    return std::nullopt;
  return std::string(f);
}

const std::array<std::string_view, 10> kAssetExtensions = {
    ".png", ".jpg", ".jpeg", ".gif", ".ico",
    ".css", ".js",  ".svg",  ".woff", ".map"};

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool has_blocked_extension(std::string_view url) {
  auto slash = url.find_last_of('/');
  std::string_view segment = slash == std::string_view::npos ? url : url.substr(slash + 1);
  auto dot = segment.find_last_of('.');
  if (dot == std::string_view::npos)
    return false;
  std::string ext = lowercase(segment.substr(dot));
  return std::find(kAssetExtensions.begin(), kAssetExtensions.end(), ext) !=
         kAssetExtensions.end();
}

} // namespace

std::int64_t to_unix_utc(int year, int month, int day, int hour, int minute, int second) {
  if (month < 1 || month > 12)
    parse_fail("month out of range: " + std::to_string(month));
  if (day < 1 || day > days_in_month(year, month))
    parse_fail("day out of range: " + std::to_string(day));
  if (hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 || second > 60)
    parse_fail("time of day out of range");
  return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

LogRecord parse_clf_line(std::string_view line) {
  line = trim(line);
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string_view {
    while (pos < line.size() && line[pos] == ' ')
      ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ')
      ++pos;
    if (start == pos)
      parse_fail("truncated log line");
    return line.substr(start, pos - start);
  };

  LogRecord record;
  record.user_ip = std::string(next_token());
  next_token(); // ident
  next_token(); // authuser

  while (pos < line.size() && line[pos] == ' ')
    ++pos;
  if (pos >= line.size() || line[pos] != '[')
    parse_fail("missing [timestamp]");
  auto close = line.find(']', pos);
  if (close == std::string_view::npos)
    parse_fail("unterminated [timestamp]");
  std::string_view stamp = line.substr(pos + 1, close - pos - 1);
  pos = close + 1;

  // dd/Mon/yyyy:HH:MM:SS +ZZZZ
  long long day = 0, year = 0, hh = 0, mm = 0, ss = 0;
  if (stamp.size() < 26 || stamp[2] != '/' || stamp[6] != '/' || stamp[11] != ':' ||
      stamp[14] != ':' || stamp[17] != ':' || stamp[20] != ' ')
    parse_fail("unparseable timestamp: " + std::string(stamp));
  int month = month_from_abbrev(stamp.substr(3, 3));
  if (month == 0 || !parse_int(stamp.substr(0, 2), day) || !parse_int(stamp.substr(7, 4), year) ||
      !parse_int(stamp.substr(12, 2), hh) || !parse_int(stamp.substr(15, 2), mm) ||
      !parse_int(stamp.substr(18, 2), ss))
    parse_fail("unparseable timestamp: " + std::string(stamp));
  std::string_view zone = stamp.substr(21);
  long long zh = 0, zm = 0;
  if (zone.size() != 5 || (zone[0] != '+' && zone[0] != '-') ||
      !parse_int(zone.substr(1, 2), zh) || !parse_int(zone.substr(3, 2), zm))
    parse_fail("unparseable timezone: " + std::string(zone));
  std::int64_t offset = (zh * 3600 + zm * 60) * (zone[0] == '-' ? -1 : 1);
  record.timestamp = to_unix_utc(static_cast<int>(year), month, static_cast<int>(day),
                                 static_cast<int>(hh), static_cast<int>(mm),
                                 static_cast<int>(ss)) -
                     offset;

  while (pos < line.size() && line[pos] == ' ')
    ++pos;
  if (pos >= line.size() || line[pos] != '"')
    parse_fail("missing request field");
  auto endquote = line.find('"', pos + 1);
  if (endquote == std::string_view::npos)
    parse_fail("unterminated request field");
  std::string_view request = line.substr(pos + 1, endquote - pos - 1);
  pos = endquote + 1;

  std::size_t sp1 = request.find(' ');
  if (sp1 == std::string_view::npos)
    parse_fail("malformed request: " + std::string(request));
  std::size_t sp2 = request.find(' ', sp1 + 1);
  record.method = std::string(request.substr(0, sp1));
  record.url = std::string(request.substr(sp1 + 1, sp2 == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : sp2 - sp1 - 1));
  if (record.url.empty())
    parse_fail("empty request path");

  std::string_view status_tok = next_token();
  if (status_tok != "-") {
    long long status = 0;
    if (!parse_int(status_tok, status))
      parse_fail("bad status: " + std::string(status_tok));
    if (status < 100 || status > 599)
      parse_fail("status out of range: " + std::string(status_tok));
    record.status = static_cast<int>(status);
  }

  std::string_view bytes_tok = next_token();
  if (bytes_tok != "-") {
    long long bytes = 0;
    if (!parse_int(bytes_tok, bytes) || bytes < 0)
      parse_fail("bad size: " + std::string(bytes_tok));
    record.bytes = static_cast<std::uint64_t>(bytes);
  }

  // Combined-format trailers after the size field are ignored.
  return record;
}

LogRecord parse_csv_record(std::string_view row) {
  row = trim(row);
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(row.substr(start)));
      break;
    }
    fields.push_back(trim(row.substr(start, comma - start)));
    start = comma + 1;
  }
  if (fields.size() != 7)
    parse_fail("expected 7 fields, got " + std::to_string(fields.size()));

  LogRecord record;
  record.user_ip = std::string(fields[0]);
  if (record.user_ip.empty())
    parse_fail("empty user ip");
  record.server_ip = optional_field(fields[1]);
  record.url = std::string(fields[2]);
  if (record.url.empty())
    parse_fail("empty url");
  record.domain = optional_field(fields[3]);
  record.target_ip = optional_field(fields[4]);

  std::string_view date = fields[5], time = fields[6];
  long long y = 0, mo = 0, d = 0, hh = 0, mi = 0, ss = 0;
  if (date.size() != 10 || date[4] != '-' || date[7] != '-' ||
      !parse_int(date.substr(0, 4), y) || !parse_int(date.substr(5, 2), mo) ||
      !parse_int(date.substr(8, 2), d))
    parse_fail("unparseable date: " + std::string(date));
  if (time.size() != 8 || time[2] != ':' || time[5] != ':' ||
      !parse_int(time.substr(0, 2), hh) || !parse_int(time.substr(3, 2), mi) ||
      !parse_int(time.substr(6, 2), ss))
    parse_fail("unparseable time: " + std::string(time));
  record.timestamp = to_unix_utc(static_cast<int>(y), static_cast<int>(mo), static_cast<int>(d),
                                 static_cast<int>(hh), static_cast<int>(mi), static_cast<int>(ss));
  return record;
}

std::string format_csv_record(const LogRecord &record) {
  int y = 0, m = 0, d = 0;
  std::int64_t days = record.timestamp / 86400;
  std::int64_t rem = record.timestamp % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  civil_from_days(days, y, m, d);
  char datebuf[32];
  std::snprintf(datebuf, sizeof datebuf, "%04d-%02d-%02d,%02d:%02d:%02d", y, m, d,
                static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                static_cast<int>(rem % 60));

  auto or_dash = [](const std::optional<std::string> &f) {
    return f ? *f : std::string("-");
  };
  std::ostringstream out;
  out << record.user_ip << ',' << or_dash(record.server_ip) << ',' << record.url << ','
      << or_dash(record.domain) << ',' << or_dash(record.target_ip) << ',' << datebuf;
  return out.str();
}

std::string normalize_url(std::string_view raw) {
  // Absolute-form request targets keep only the path part.
  auto scheme = raw.find("://");
  if (scheme != std::string_view::npos) {
    auto slash = raw.find('/', scheme + 3);
    raw = slash == std::string_view::npos ? std::string_view("/") : raw.substr(slash);
  }
  auto hash = raw.find('#');
  if (hash != std::string_view::npos)
    raw = raw.substr(0, hash);
  auto query = raw.find('?');
  if (query != std::string_view::npos)
    raw = raw.substr(0, query);

  std::string path = lowercase(raw);
  if (path.empty() || path.front() != '/')
    path.insert(path.begin(), '/');

  std::vector<std::string_view> kept;
  std::string_view view(path);
  bool trailing_slash = view.size() > 1 && view.back() == '/';
  std::size_t pos = 1;
  while (pos <= view.size()) {
    auto next = view.find('/', pos);
    std::string_view segment = next == std::string_view::npos
                                   ? view.substr(pos)
                                   : view.substr(pos, next - pos);
    if (segment == "..") {
      if (!kept.empty())
        kept.pop_back();
      trailing_slash = true;
    } else if (segment == ".") {
      trailing_slash = true;
    } else if (!segment.empty()) {
      kept.push_back(segment);
      trailing_slash = next != std::string_view::npos && view.back() == '/';
    }
    if (next == std::string_view::npos)
      break;
    pos = next + 1;
  }

  std::string out = "/";
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out.append(kept[i]);
    if (i + 1 < kept.size())
      out.push_back('/');
  }
  if (trailing_slash && !kept.empty())
    out.push_back('/');
  return out;
}

std::vector<LogRecord> filter_records(std::vector<LogRecord> records) {
  auto dropped = [](const LogRecord &r) {
    if (has_blocked_extension(r.url))
      return true;
    if (r.status && !(*r.status >= 200 && *r.status < 400))
      return true;
    if (r.method && *r.method != "GET")
      return true;
    return false;
  };
  records.erase(std::remove_if(records.begin(), records.end(), dropped), records.end());
  return records;
}

std::pair<PageCatalog, std::vector<PageId>> intern_pages(const std::vector<LogRecord> &records) {
  PageCatalog catalog;
  std::vector<PageId> ids;
  ids.reserve(records.size());
  for (const auto &record : records)
    ids.push_back(catalog.intern(record.url));
  return {std::move(catalog), std::move(ids)};
}

std::vector<LogRecord> parse_log_stream(std::istream &in, LogFormat format, bool csv_header,
                                        std::string_view source_name) {
  std::vector<LogRecord> records;
  std::string line;
  std::size_t lineno = 0;
  bool skip_header = format == LogFormat::Csv && csv_header;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_header) {
      skip_header = false;
      continue;
    }
    if (trim(line).empty())
      continue;
    try {
      records.push_back(format == LogFormat::Clf ? parse_clf_line(line)
                                                 : parse_csv_record(line));
    } catch (const Error &e) {
      throw Error(e.code(), std::string(source_name) + ":" + std::to_string(lineno) + ": " +
                                e.what());
    }
  }
  return records;
}

std::vector<LogRecord> read_log_file(const std::string &path, LogFormat format, bool csv_header) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Io, "cannot open " + path);
  return parse_log_stream(in, format, csv_header, path);
}

} // namespace pagecast
