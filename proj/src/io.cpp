#include "flatpart/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "flatpart/errors.hpp"

namespace flatpart {

void write_triangle_csv(std::ostream& out, const CountTriangle& t) {
    out << "n,k,value\n";
    for (int n : t.row_indices())
        for (int k = 1; k <= t.row_length(n); ++k)
            out << n << "," << k << "," << t.value(n, k) << "\n";
}

void write_triangle_jsonl(std::ostream& out, const CountTriangle& t) {
    for (int n : t.row_indices())
        for (int k = 1; k <= t.row_length(n); ++k) {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["k"] = k;
            j["value"] = t.value(n, k).str();
            j["method"] = t.method();
            j["s"] = t.s();
            out << j.dump() << "\n";
        }
}

void write_triangle_text(std::ostream& out, const CountTriangle& t) {
    for (int n : t.row_indices()) {
        out << n << ":";
        for (int k = 1; k <= t.row_length(n); ++k) out << " " << t.value(n, k);
        out << "\n";
    }
}

CountTriangle read_triangle_csv(std::istream& in, const std::string& method, int s) {
    CountTriangle t(method, s);
    std::string line;
    bool first = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "n,k,value") continue;
        }
        std::istringstream row(line);
        std::string n_str, k_str, v_str;
        if (!std::getline(row, n_str, ',') || !std::getline(row, k_str, ',') ||
            !std::getline(row, v_str))
            throw IoError("csv: malformed line " + std::to_string(lineno));
        try {
            t.set(std::stoi(n_str), std::stoi(k_str), Integer(v_str));
            t.ensure_row(std::stoi(n_str));
        } catch (const std::exception&) {
            throw IoError("csv: malformed line " + std::to_string(lineno));
        }
    }
    return t;
}

CountTriangle read_triangle_jsonl(std::istream& in) {
    CountTriangle t;
    std::string line;
    int lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
            const int n = j.at("n").get<int>();
            const int k = j.at("k").get<int>();
            t.set(n, k, Integer(j.at("value").get<std::string>()));
            t.ensure_row(n);
            if (first) {
                t.set_method(j.at("method").get<std::string>());
                t.set_s(j.at("s").get<int>());
                first = false;
            }
        } catch (const nlohmann::json::exception&) {
            throw IoError("jsonl: malformed line " + std::to_string(lineno));
        }
    }
    return t;
}

void write_bfile(std::ostream& out, const std::vector<Integer>& values, long long start_index) {
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (start_index + static_cast<long long>(i)) << " " << values[i] << "\n";
}

std::string format_word(const Permutation& p) {
    std::ostringstream out;
    const bool compact = p.size() <= 9;
    for (int i = 0; i < p.size(); ++i) {
        if (i && !compact) out << " ";
        out << p[i];
    }
    return out.str();
}

std::string format_partition(const SetPartition& p) {
    std::ostringstream out;
    const bool compact = p.ground_size() <= 9;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (b) out << "|";
        for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
            if (i && !compact) out << " ";
            out << p.blocks[b][i];
        }
    }
    return out.str();
}

namespace {

std::vector<int> parse_values(const std::string& text) {
    std::vector<int> values;
    try {
        if (text.find(' ') != std::string::npos || text.find(',') != std::string::npos) {
            const char sep = text.find(',') != std::string::npos ? ',' : ' ';
            std::string token;
            std::istringstream in(text);
            while (std::getline(in, token, sep))
                if (!token.empty()) values.push_back(std::stoi(token));
        } else {
            for (char c : text) {
                if (c < '0' || c > '9') throw std::invalid_argument("bad digit");
                values.push_back(c - '0');
            }
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse values from \"" + text + "\"");
    }
    return values;
}

}  // namespace

Permutation parse_word(const std::string& text) {
    return Permutation::from_word(parse_values(text));
}

SetPartition parse_partition(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    if (!text.empty()) {
        std::istringstream in(text);
        std::string block;
        while (std::getline(in, block, '|')) blocks.push_back(parse_values(block));
    }
    return SetPartition::from_blocks(std::move(blocks));
}

}  // namespace flatpart
