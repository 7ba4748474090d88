// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/service.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>

#include <httplib.h>
#include <json.hpp>

#include "stratagem/engine.hpp"

namespace stratagem {

namespace {

using json = nlohmann::json;
using Response = Service::Response;

struct BadRequest {
    std::string code;
    std::string message;
};

Response error_response(int status, const std::string& code, const std::string& message)
{
    json body = {{"error", {{"code", code}, {"message", message}}}};
    return {status, body.dump()};
}

Response ok(const json& body)
{
    return {200, body.dump()};
}

std::optional<std::string> param(const Service::Params& params, const std::string& name)
{
    auto it = params.find(name);
    if (it == params.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t size_param(const Service::Params& params, const std::string& name,
                       std::size_t fallback, std::size_t max)
{
    auto raw = param(params, name);
    if (!raw) {
        return fallback;
    }
    std::size_t value = 0;
    const char* first = raw->data();
    const char* last = raw->data() + raw->size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (raw->empty() || ec != std::errc{} || ptr != last) {
        throw BadRequest{"invalid_integer",
                         "'" + name + "' must be a non-negative integer, got '" + *raw + "'"};
    }
    if (value > max) {
        throw BadRequest{name + "_out_of_range",
                         "'" + name + "' must not exceed " + std::to_string(max)};
    }
    return value;
}

json record_json(const Record& rec)
{
    json out = {
        {"id", rec.id},
        {"title", rec.title},
        {"abstract", rec.abstract},
        {"authors", rec.authors},
        {"issn", rec.issn ? json(*rec.issn) : json(nullptr)},
        {"journal", rec.journal_title ? json(*rec.journal_title) : json(nullptr)},
        {"descriptors", rec.descriptors},
        {"language", rec.language},
        {"year", rec.year ? json(*rec.year) : json(nullptr)},
    };
    return out;
}

SearchRequest parse_search_request(const Service::Params& params)
{
    SearchRequest req;
    req.q = param(params, "q").value_or("");
    if (auto raw = param(params, "rerank")) {
        auto mode = parse_rerank(*raw);
        if (!mode) {
            throw BadRequest{"invalid_rerank",
                             "rerank must be one of none, bradford, centrality; got '" + *raw +
                                 "'"};
        }
        req.rerank = *mode;
    }
    auto [first, last] = params.equal_range("term");
    for (auto it = first; it != last; ++it) {
        req.terms.push_back(it->second);
    }
    if (auto raw = param(params, "expand")) {
        auto mode = parse_expand(*raw);
        if (!mode) {
            throw BadRequest{"invalid_expand",
                             "expand must be one of off, auto, terms; got '" + *raw + "'"};
        }
        req.expand = *mode;
    } else if (!req.terms.empty()) {
        req.expand = ExpandMode::terms;
    }
    if (req.expand != ExpandMode::terms && !req.terms.empty()) {
        throw BadRequest{"invalid_expand", "'term' is only valid with expand=terms"};
    }
    req.top_m = size_param(params, "top_m", 3, 100);
    req.k = size_param(params, "k", kDefaultPageSize, kMaxPageSize);
    req.offset = size_param(params, "offset", 0, std::numeric_limits<std::size_t>::max());
    return req;
}

}  // namespace

Service::Service(Options options) : m_options(options) {}

void Service::set_snapshot(std::shared_ptr<const Snapshot> snapshot)
{
    std::lock_guard lock(m_mutex);
    m_snapshot = std::move(snapshot);
}

std::shared_ptr<const Snapshot> Service::snapshot() const
{
    std::lock_guard lock(m_mutex);
    return m_snapshot;
}

Response Service::get(std::string_view path, const Params& params) const
{
    if (path == "/api/health") {
        return health();
    }
    if (path == "/api/search") {
        return search(params);
    }
    if (path == "/api/suggest") {
        return suggest(params);
    }
    if (path == "/api/journals") {
        return journals(params);
    }
    if (path == "/api/authors") {
        return authors(params);
    }
    constexpr std::string_view doc_prefix = "/api/doc/";
    if (path.substr(0, doc_prefix.size()) == doc_prefix) {
        return doc(path.substr(doc_prefix.size()));
    }
    return error_response(404, "unknown_endpoint", "no endpoint at '" + std::string(path) + "'");
}

Response Service::health() const
{
    auto snap = snapshot();
    if (!snap) {
        return {503, json{{"status", "loading"}}.dump()};
    }
    return ok({{"status", "ok"}, {"docs", snap->corpus.size()}});
}

#define STRATAGEM_REQUIRE_SNAPSHOT(snap)                                                   \
    auto snap = snapshot();                                                                \
    if (!snap) {                                                                           \
        return error_response(503, "loading", "the index is still loading");               \
    }

Response Service::search(const Params& params) const
{
    STRATAGEM_REQUIRE_SNAPSHOT(snap);
    const auto started = std::chrono::steady_clock::now();
    try {
        const auto req = parse_search_request(params);
        const auto outcome = run_search(*snap, req);
        const auto& hits = outcome.ranked.hits;

        json page = json::array();
        const auto begin = std::min(req.offset, hits.size());
        const auto end = std::min(hits.size(), begin + req.k);
        for (auto i = begin; i < end; ++i) {
            const auto& hit = hits[i];
            const auto& rec = snap->corpus.at(hit.doc_id);
            page.push_back({
                {"rank", i + 1},
                {"id", hit.doc_id},
                {"title", rec.title},
                {"authors", rec.authors},
                {"journal", rec.journal_title ? json(*rec.journal_title) : json(nullptr)},
                {"issn", rec.issn ? json(*rec.issn) : json(nullptr)},
                {"year", rec.year ? json(*rec.year) : json(nullptr)},
                {"base_score", hit.base_score},
                {"score", hit.score},
                {"explain", hit.explain},
            });
        }

        // Descriptor cloud over the whole ranked set, not just this page.
        auto counts = facet_count(snap->index, outcome.ranked, FacetField::descriptor);
        std::vector<std::pair<std::string, std::size_t>> cloud(counts.begin(), counts.end());
        std::stable_sort(cloud.begin(), cloud.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        if (cloud.size() > 30) {
            cloud.resize(30);
        }
        json facets = json::array();
        for (const auto& [value, count] : cloud) {
            facets.push_back({{"value", value}, {"count", count}});
        }

        json body = {
            {"query", req.q},
            {"rerank", to_string(req.rerank)},
            {"expansion", {{"mode", to_string(req.expand)}, {"terms", outcome.expansion_terms}}},
            {"total", outcome.ranked.total},
            {"ranked", hits.size()},
            {"offset", req.offset},
            {"k", req.k},
            {"hits", std::move(page)},
            {"facets", {{"descriptors", std::move(facets)}}},
        };
        if (m_options.report_timing) {
            const std::chrono::duration<double, std::milli> elapsed =
                std::chrono::steady_clock::now() - started;
            body["elapsed_ms"] = elapsed.count();
        }
        return ok(body);
    } catch (const BadRequest& e) {
        return error_response(400, e.code, e.message);
    }
}

Response Service::suggest(const Params& params) const
{
    STRATAGEM_REQUIRE_SNAPSHOT(snap);
    try {
        const auto q = param(params, "q").value_or("");
        const auto k = size_param(params, "k", 10, 100);
        json list = json::array();
        for (const auto& s : stratagem::suggest(snap->model, snap->index.tokenizer(), q, k)) {
            list.push_back({{"descriptor", s.descriptor}, {"score", s.score}, {"support", s.support}});
        }
        return ok({{"query", q}, {"suggestions", std::move(list)}});
    } catch (const BadRequest& e) {
        return error_response(400, e.code, e.message);
    }
}

Response Service::journals(const Params& params) const
{
    STRATAGEM_REQUIRE_SNAPSHOT(snap);
    try {
        const auto q = param(params, "q").value_or("");
        const auto k = size_param(params, "k", 20, kMaxPageSize);
        const auto groups = journal_table(base_result(*snap, q), snap->index);
        json list = json::array();
        for (std::size_t i = 0; i < groups.size() && i < k; ++i) {
            const auto& g = groups[i];
            const auto& first = snap->corpus.at(g.members.front());
            list.push_back({
                {"issn", g.issn},
                {"journal", first.journal_title ? json(*first.journal_title) : json(nullptr)},
                {"count", g.count},
                {"docs", g.members},
            });
        }
        return ok({{"query", q}, {"journals", std::move(list)}});
    } catch (const BadRequest& e) {
        return error_response(400, e.code, e.message);
    }
}

Response Service::authors(const Params& params) const
{
    STRATAGEM_REQUIRE_SNAPSHOT(snap);
    try {
        const auto q = param(params, "q").value_or("");
        const auto k = size_param(params, "k", 20, kMaxPageSize);
        const auto graph = build_graph(base_result(*snap, q), snap->corpus);
        json list = json::array();
        for (const auto& row : author_table(graph, k)) {
            list.push_back({{"name", row.name},
                            {"betweenness", row.betweenness},
                            {"doc_count", row.doc_count}});
        }
        return ok({{"query", q}, {"authors", std::move(list)}});
    } catch (const BadRequest& e) {
        return error_response(400, e.code, e.message);
    }
}

Response Service::doc(std::string_view id) const
{
    STRATAGEM_REQUIRE_SNAPSHOT(snap);
    const auto* rec = snap->corpus.find(id);
    if (!rec) {
        return error_response(404, "not_found", "no document with id '" + std::string(id) + "'");
    }
    return ok(record_json(*rec));
}

#undef STRATAGEM_REQUIRE_SNAPSHOT

struct HttpServer::Impl {
    explicit Impl(const Service& s) : service(s) {}

    const Service& service;
    httplib::Server server;
};

HttpServer::HttpServer(const Service& service) : m_impl(std::make_unique<Impl>(service))
{
    auto& svr = m_impl->server;
    svr.set_default_headers({
        {"Access-Control-Allow-Origin", "*"},
        {"Access-Control-Allow-Methods", "GET, OPTIONS"},
        {"Access-Control-Allow-Headers", "Content-Type"},
    });
    svr.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
    });
    svr.Get(R"(/api/.*)", [this](const httplib::Request& req, httplib::Response& res) {
        Service::Params params(req.params.begin(), req.params.end());
        auto out = m_impl->service.get(req.path, params);
        res.status = out.status;
        res.set_content(out.body, out.content_type);
    });
}

HttpServer::~HttpServer()
{
    stop();
}

int HttpServer::bind(const std::string& host, int port)
{
    if (port == 0) {
        return m_impl->server.bind_to_any_port(host);
    }
    return m_impl->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind()
{
    return m_impl->server.listen_after_bind();
}

void HttpServer::stop()
{
    if (m_impl->server.is_running()) {
        m_impl->server.stop();
    }
}

void HttpServer::wait_until_ready() const
{
    m_impl->server.wait_until_ready();
}

std::optional<Address> parse_address(std::string_view text)
{
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
        return std::nullopt;
    }
    Address addr;
    addr.host = std::string(text.substr(0, colon));
    const auto port_text = text.substr(colon + 1);
    auto [ptr, ec] =
        std::from_chars(port_text.data(), port_text.data() + port_text.size(), addr.port);
    if (ec != std::errc{} || ptr != port_text.data() + port_text.size() || addr.port < 0 ||
        addr.port > 65535) {
        return std::nullopt;
    }
    return addr;
}

}  // namespace stratagem
