/**************************************************************************
 * serialize.cpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "tgrs/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tgrs/error.hpp"

namespace tgrs::io {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse_error, what); }

json field_json(const gf::FieldCtx& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

const json& member(const json& obj, const char* key) {
    if (!obj.is_object()) fail("expected an object holding '" + std::string(key) + "'");
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

std::uint64_t as_uint(const json& j, const std::string& what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        fail(what + " must be a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

Elem as_elem(const json& j, const gf::FieldCtx& f, const std::string& what) {
    const auto x = as_uint(j, what);
    if (!f.contains(x)) fail(what + " = " + std::to_string(x) + " is not an element of " + f.describe());
    return static_cast<Elem>(x);
}

std::vector<Elem> as_elems(const json& j, const gf::FieldCtx& f, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array");
    std::vector<Elem> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_elem(j[i], f, what + "[" + std::to_string(i) + "]"));
    return out;
}

gf::Field field_from_json(const json& j) {
    const auto p = as_uint(member(j, "p"), "field.p");
    const auto m = as_uint(member(j, "m"), "field.m");
    const auto& mod = member(j, "modulus");
    if (!mod.is_array()) fail("field.modulus must be an array");
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : mod) coeffs.push_back(as_uint(c, "field.modulus entry"));
    if (m == 0 || m > 64) fail("field.m out of range");
    if (coeffs.size() != m + 1) fail("field.modulus must have m + 1 coefficients");
    try {
        return gf::FieldCtx::create(p, static_cast<unsigned>(m), coeffs);
    } catch (const Error& e) {
        fail(std::string("invalid field descriptor: ") + e.what());
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string dump_spec(const SpecDocument& doc) {
    const auto& s = doc.spec;
    json j{{"field", field_json(*s.field)},
           {"n", s.n},
           {"k", s.k},
           {"t", s.t},
           {"h", s.h},
           {"eta", s.eta},
           {"alpha", s.alpha},
           {"v", s.v}};
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
    return j.dump(2) + "\n";
}

SpecDocument parse_spec(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) fail("spec document must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::vector<std::string> known{"alpha", "eta", "field", "h", "k", "metadata", "n", "t", "v"};
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) fail("unknown key '" + it.key() + "'");
    }
    SpecDocument doc;
    auto& s = doc.spec;
    s.field = field_from_json(member(j, "field"));
    s.n = as_uint(member(j, "n"), "n");
    s.k = as_uint(member(j, "k"), "k");
    s.t = as_uint(member(j, "t"), "t");
    s.h = as_uint(member(j, "h"), "h");
    s.eta = as_elem(member(j, "eta"), *s.field, "eta");
    s.alpha = as_elems(member(j, "alpha"), *s.field, "alpha");
    s.v = as_elems(member(j, "v"), *s.field, "v");
    if (s.alpha.size() != s.n) fail("alpha has " + std::to_string(s.alpha.size()) + " entries, n = " + std::to_string(s.n));
    if (s.v.size() != s.n) fail("v has " + std::to_string(s.v.size()) + " entries, n = " + std::to_string(s.n));
    if (auto it = j.find("metadata"); it != j.end()) {
        if (!it->is_object()) fail("metadata must be an object");
        for (auto m = it->begin(); m != it->end(); ++m) {
            if (!m->is_string()) fail("metadata." + m.key() + " must be a string");
            doc.metadata[m.key()] = m->get<std::string>();
        }
    }
    return doc;
}

std::string dump_matrix_text(const alg::Matrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << '\n';
    }
    return os.str();
}

std::string dump_matrix_json(const alg::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<Elem>(m.row(r).begin(), m.row(r).end()));
    json j{{"field", field_json(*m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
    return j.dump(2) + "\n";
}

alg::Matrix parse_matrix_text(const gf::Field& field, const std::string& text) {
    std::istringstream is(text);
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) fail("matrix text must start with 'rows cols'");
    alg::Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            long long x = -1;
            if (!(is >> x)) fail("matrix text ends early at row " + std::to_string(r));
            if (x < 0 || !field->contains(static_cast<std::uint64_t>(x))) fail("matrix entry out of range");
            m(r, c) = static_cast<Elem>(x);
        }
    }
    std::string rest;
    if (is >> rest) fail("trailing data after matrix");
    return m;
}

alg::Matrix parse_matrix_json(const std::string& text) {
    const json j = parse_json(text);
    const auto field = field_from_json(member(j, "field"));
    const auto rows = as_uint(member(j, "rows"), "rows");
    const auto cols = as_uint(member(j, "cols"), "cols");
    const auto& entries = member(j, "entries");
    if (!entries.is_array() || entries.size() != rows) fail("entries must hold 'rows' arrays");
    alg::Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto row = as_elems(entries[r], *field, "entries[" + std::to_string(r) + "]");
        if (row.size() != cols) fail("row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::invalid_argument, "cannot write '" + path + "'");
    out << contents;
    if (!out) throw Error(Errc::invalid_argument, "write to '" + path + "' failed");
}

}  // namespace tgrs::io
