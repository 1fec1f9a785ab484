#ifndef PAGECAST_LOG_INGEST_HPP
#define PAGECAST_LOG_INGEST_HPP

#include "types.hpp"

#include <istream>
#include <utility>
#include <vector>

namespace pagecast {

enum class LogFormat { Clf, Csv };

// NCSA Common Log Format line -> record. The url field is left raw;
// combined-format trailers (referer, agent) are tolerated and ignored.
LogRecord parse_clf_line(std::string_view line);

// 7-column row: user_ip, server_ip, url, domain, target_ip, date, time.
// "-" or empty marks an absent optional field.
LogRecord parse_csv_record(std::string_view row);

// Record -> the same 7-column schema. parse_csv_record(format_csv_record(r))
// is field-equal to r for records without status/bytes.
std::string format_csv_record(const LogRecord &record);

// Lowercased path, query/fragment stripped, dot-segments resolved. Always
// returns something starting with "/".
std::string normalize_url(std::string_view raw);

// Horizontal filtration: drop static assets, non-2xx/3xx statuses and
// non-GET methods. Survivor order is preserved.
std::vector<LogRecord> filter_records(std::vector<LogRecord> records);

// First-seen page interning over filtered, normalized records.
std::pair<PageCatalog, std::vector<PageId>> intern_pages(const std::vector<LogRecord> &records);

// Validating civil -> unix conversion shared by both parsers.
std::int64_t to_unix_utc(int year, int month, int day, int hour, int minute, int second);

// Read and parse a whole stream; parse errors gain "<source>:<line>" context.
std::vector<LogRecord> parse_log_stream(std::istream &in, LogFormat format, bool csv_header,
                                        std::string_view source_name);

std::vector<LogRecord> read_log_file(const std::string &path, LogFormat format, bool csv_header);

} // namespace pagecast

#endif
