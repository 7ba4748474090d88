// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/corpus.hpp"

#include <cctype>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "stratagem/error.hpp"

namespace stratagem {

namespace {

using json = nlohmann::json;

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string at_line(std::size_t line_no)
{
    return line_no == 0 ? std::string{} : " (line " + std::to_string(line_no) + ")";
}

[[noreturn]] void invalid(const std::string& field, const std::string& why, std::size_t line_no)
{
    throw ValidationError("field '" + field + "': " + why + at_line(line_no), field, line_no);
}

std::optional<std::string> optional_string(const json& obj, const char* field,
                                           std::size_t line_no)
{
    auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) {
        return std::nullopt;
    }
    if (!it->is_string()) {
        invalid(field, "expected a string", line_no);
    }
    return it->get<std::string>();
}

std::vector<std::string> string_list(const json& obj, const char* field, std::size_t line_no)
{
    std::vector<std::string> out;
    auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) {
        return out;
    }
    if (!it->is_array()) {
        invalid(field, "expected an array of strings", line_no);
    }
    std::unordered_set<std::string> seen;
    for (const auto& item : *it) {
        if (!item.is_string()) {
            invalid(field, "expected an array of strings", line_no);
        }
        auto name = normalize_name(item.get<std::string>());
        if (!name.empty() && seen.insert(name).second) {
            out.push_back(std::move(name));
        }
    }
    return out;
}

}  // namespace

std::string normalize_name(std::string_view raw)
{
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c);
    }
    return out;
}

bool is_issn(std::string_view value)
{
    if (value.size() != 9 || value[4] != '-') {
        return false;
    }
    for (std::size_t i = 0; i < 8; ++i) {
        const char c = value[i < 4 ? i : i + 1];
        const bool digit = std::isdigit(static_cast<unsigned char>(c)) != 0;
        if (!digit && !(i == 7 && c == 'X')) {
            return false;
        }
    }
    return true;
}

Record parse_record(std::string_view line, std::size_t line_no)
{
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON" + at_line(line_no) + ": " + e.what(), line_no);
    }
    if (!obj.is_object()) {
        throw ParseError("expected a JSON object" + at_line(line_no), line_no);
    }

    Record rec;
    auto id = optional_string(obj, "id", line_no);
    if (!id || normalize_name(*id).empty()) {
        invalid("id", "missing or empty", line_no);
    }
    rec.id = normalize_name(*id);

    auto title = optional_string(obj, "title", line_no);
    if (!title) {
        invalid("title", "missing", line_no);
    }
    rec.title = normalize_name(*title);
    rec.abstract = normalize_name(optional_string(obj, "abstract", line_no).value_or(""));
    rec.authors = string_list(obj, "authors", line_no);
    rec.descriptors = string_list(obj, "descriptors", line_no);

    if (auto issn = optional_string(obj, "issn", line_no)) {
        auto value = normalize_name(*issn);
        if (!value.empty()) {
            if (!is_issn(value)) {
                invalid("issn", "'" + value + "' does not match NNNN-NNNC", line_no);
            }
            rec.issn = std::move(value);
        }
    }
    if (auto journal = optional_string(obj, "journal_title", line_no)) {
        auto value = normalize_name(*journal);
        if (!value.empty()) {
            rec.journal_title = std::move(value);
        }
    }
    rec.language = normalize_name(optional_string(obj, "language", line_no).value_or(""));

    if (auto it = obj.find("year"); it != obj.end() && !it->is_null()) {
        if (!it->is_number_integer()) {
            invalid("year", "expected an integer", line_no);
        }
        rec.year = it->get<int>();
    }
    return rec;
}

std::string serialize_record(const Record& record)
{
    json obj = json::object();
    obj["id"] = record.id;
    obj["title"] = record.title;
    if (!record.abstract.empty()) {
        obj["abstract"] = record.abstract;
    }
    if (!record.authors.empty()) {
        obj["authors"] = record.authors;
    }
    if (record.issn) {
        obj["issn"] = *record.issn;
    }
    if (record.journal_title) {
        obj["journal_title"] = *record.journal_title;
    }
    if (!record.descriptors.empty()) {
        obj["descriptors"] = record.descriptors;
    }
    if (!record.language.empty()) {
        obj["language"] = record.language;
    }
    if (record.year) {
        obj["year"] = *record.year;
    }
    return obj.dump();
}

Corpus::Corpus(std::vector<Record> records) : m_records(std::move(records))
{
    m_by_id.reserve(m_records.size());
    for (std::size_t i = 0; i < m_records.size(); ++i) {
        auto [it, fresh] = m_by_id.emplace(m_records[i].id, i);
        if (!fresh) {
            throw ValidationError("duplicate id '" + m_records[i].id + "' at records " +
                                      std::to_string(it->second + 1) + " and " +
                                      std::to_string(i + 1),
                                  "id");
        }
    }
}

const Record* Corpus::find(std::string_view id) const
{
    auto it = m_by_id.find(std::string(id));
    return it == m_by_id.end() ? nullptr : &m_records[it->second];
}

const Record& Corpus::at(std::string_view id) const
{
    if (const auto* rec = find(id)) {
        return *rec;
    }
    throw ConsistencyError("unknown document id '" + std::string(id) + "'");
}

Corpus load_corpus(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open corpus file '" + path.string() + "'");
    }
    std::vector<Record> records;
    std::unordered_map<std::string, std::size_t> first_line;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (normalize_name(line).empty()) {
            continue;
        }
        auto rec = parse_record(line, line_no);
        auto [it, fresh] = first_line.emplace(rec.id, line_no);
        if (!fresh) {
            throw ValidationError("duplicate id '" + rec.id + "' on lines " +
                                      std::to_string(it->second) + " and " +
                                      std::to_string(line_no),
                                  "id", line_no);
        }
        records.push_back(std::move(rec));
    }
    if (in.bad()) {
        throw IoError("error while reading '" + path.string() + "'");
    }
    return Corpus(std::move(records));
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    for (const auto& rec : corpus.records()) {
        out << serialize_record(rec) << '\n';
    }
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

}  // namespace stratagem
