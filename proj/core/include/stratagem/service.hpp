// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "stratagem/snapshot.hpp"

namespace stratagem {

/// Transport-independent request handling for the JSON API. Handlers read
/// one snapshot pointer per request, so a swap never affects a request in
/// flight.
class Service {
  public:
    using Params = std::multimap<std::string, std::string>;

    struct Response {
        int status = 200;
        std::string body;
        std::string content_type = "application/json";
    };

    struct Options {
        /// Include `elapsed_ms` in search responses.
        bool report_timing = true;
    };

    Service() : Service(Options{}) {}
    explicit Service(Options options);

    /// Until the first snapshot arrives every data endpoint answers 503.
    void set_snapshot(std::shared_ptr<const Snapshot> snapshot);
    std::shared_ptr<const Snapshot> snapshot() const;

    /// Dispatch a GET on `path` (already URL-decoded).
    Response get(std::string_view path, const Params& params) const;

    Response health() const;
    Response search(const Params& params) const;
    Response suggest(const Params& params) const;
    Response journals(const Params& params) const;
    Response authors(const Params& params) const;
    Response doc(std::string_view id) const;

  private:
    Options m_options;
    mutable std::mutex m_mutex;
    std::shared_ptr<const Snapshot> m_snapshot;
};

/// HTTP/1.1 front end for a Service with permissive CORS headers.
class HttpServer {
  public:
    explicit HttpServer(const Service& service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Bind to host:port (port 0 picks a free one). Returns the bound port or
    /// -1 on failure.
    int bind(const std::string& host, int port);
    /// Blocks until stop() is called.
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> m_impl;
};

struct Address {
    std::string host;
    int port = 0;
};

/// "host:port" with port in [0, 65535]; nullopt on anything else.
std::optional<Address> parse_address(std::string_view text);

}  // namespace stratagem
