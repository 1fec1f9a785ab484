#ifndef PAGECAST_TYPES_HPP
#define PAGECAST_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pagecast {

using PageId = std::uint32_t;

enum class ErrorCode {
  Io,
  Parse,
  InvalidArgument,
  NoData,
  FormatVersion,
  UndefinedState,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// One parsed web access event. url holds the raw request path until
// normalize_url is applied; timestamp is unix seconds, UTC.
struct LogRecord {
  std::string user_ip;
  std::optional<std::string> server_ip;
  std::string url;
  std::optional<std::string> domain;
  std::optional<std::string> target_ip;
  std::int64_t timestamp = 0;
  std::optional<int> status;
  std::optional<std::uint64_t> bytes;
  std::optional<std::string> method;

  bool operator==(const LogRecord &) const = default;
};

// Bijection normalized URL <-> PageId, ids assigned in first-seen order.
class PageCatalog {
public:
  PageId intern(std::string_view url) {
    auto it = index_.find(std::string(url));
    if (it != index_.end())
      return it->second;
    PageId id = static_cast<PageId>(urls_.size());
    urls_.emplace_back(url);
    index_.emplace(urls_.back(), id);
    return id;
  }

  std::optional<PageId> find(std::string_view url) const {
    auto it = index_.find(std::string(url));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  const std::string &url(PageId id) const { return urls_.at(id); }
  std::size_t size() const { return urls_.size(); }

  bool operator==(const PageCatalog &other) const { return urls_ == other.urls_; }

private:
  std::vector<std::string> urls_;
  std::unordered_map<std::string, PageId> index_;
};

// One user's ordered page visits, bounded by the inactivity timeout.
struct Session {
  std::string user_ip;
  std::vector<PageId> pages;
  std::int64_t start = 0;
  std::int64_t end = 0;

  bool operator==(const Session &) const = default;
};

} // namespace pagecast

#endif
