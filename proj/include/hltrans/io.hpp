/*
   Copyright 2026 The hltrans Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLTRANS_IO_HPP
#define HLTRANS_IO_HPP

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctab.hpp"
#include "indexset.hpp"
#include "tableaux.hpp"
#include "tpoly.hpp"
#include "transition.hpp"

namespace hltrans::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

/// Ascending coefficient array; coefficients outside int64 become strings.
inline json to_json(const TPoly& p) {
    json a = json::array();
    for (const Integer& c : p.coeffs()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            a.push_back(static_cast<std::int64_t>(c));
        else
            a.push_back(c.str());
    }
    return a;
}

inline TPoly tpoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tpoly JSON must be an array");
    std::vector<Integer> cs;
    for (const auto& x : j) {
        if (x.is_number_integer())
            cs.emplace_back(x.get<std::int64_t>());
        else if (x.is_string())
            cs.emplace_back(x.get<std::string>());
        else
            throw std::invalid_argument("tpoly JSON coefficients must be integers or strings");
    }
    return TPoly(std::move(cs));
}

inline json to_json(const Composition& a) { return a.parts(); }
inline json to_json(const Partition& p) { return p.parts(); }

inline std::vector<int> int_list(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("expected an array of integers");
        v.push_back(x.get<int>());
    }
    return v;
}

inline Composition composition_from_json(const json& j) { return Composition(int_list(j)); }

inline json to_json(const SkewShape& s) { return json{{"outer", s.outer().parts()}, {"inner", s.inner().parts()}}; }

inline SkewShape skew_from_json(const json& j) {
    return SkewShape(Partition(int_list(j.at("outer"))), Partition(j.contains("inner") ? int_list(j.at("inner")) : std::vector<int>{}));
}

inline json to_json(const Cell& c) { return json::array({c.row, c.col}); }

inline json cells_json(const std::vector<Cell>& cells) {
    json a = json::array();
    for (const Cell& c : cells) a.push_back(to_json(c));
    return a;
}

inline json rows_json(const std::vector<std::vector<int>>& rows) {
    json a = json::array();
    for (const auto& r : rows) a.push_back(r);
    return a;
}

inline json to_json(const Tableau& t) { return json{{"shape", to_json(t.shape())}, {"rows", rows_json(t.rows())}}; }

inline Tableau tableau_from_json(const json& j) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : j.at("rows")) rows.push_back(int_list(r));
    return Tableau(skew_from_json(j.at("shape")), std::move(rows));
}

inline json to_json(const CompositionTableau& t) {
    return json{{"shape", to_json(t.shape())}, {"rows", rows_json(t.rows())}};
}

inline json to_json(const TransitionMatrix& m) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& r : m.rows) rows.push_back(to_json(r));
    for (const auto& c : m.cols) cols.push_back(to_json(c));
    for (const auto& row : m.entries) {
        json er = json::array();
        for (const auto& e : row) er.push_back(to_json(e));
        entries.push_back(std::move(er));
    }
    return json{{"from", basis_label(m.from)}, {"to", basis_label(m.to)}, {"n", m.n},
                {"rows", rows},                {"cols", cols},             {"entries", entries}};
}

inline TransitionMatrix matrix_from_json(const json& j) {
    TransitionMatrix m;
    m.from = parse_basis(j.at("from").get<std::string>());
    m.to = parse_basis(j.at("to").get<std::string>());
    m.n = j.at("n").get<int>();
    for (const auto& r : j.at("rows")) m.rows.push_back(composition_from_json(r));
    for (const auto& c : j.at("cols")) m.cols.push_back(composition_from_json(c));
    for (const auto& row : j.at("entries")) {
        std::vector<TPoly> er;
        for (const auto& e : row) er.push_back(tpoly_from_json(e));
        if (er.size() != m.cols.size()) throw std::invalid_argument("matrix JSON: ragged entries");
        m.entries.push_back(std::move(er));
    }
    if (m.entries.size() != m.rows.size()) throw std::invalid_argument("matrix JSON: row count mismatch");
    return m;
}

inline json to_json(const QSymExpansion& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms) terms.push_back(json{{"index", to_json(k)}, {"coeff", to_json(c)}});
    return json{{"basis", basis_label(e.basis)}, {"terms", terms}};
}

inline QSymExpansion expansion_from_json(const json& j) {
    QSymExpansion e{parse_basis(j.at("basis").get<std::string>()), {}};
    for (const auto& t : j.at("terms")) e.add(composition_from_json(t.at("index")), tpoly_from_json(t.at("coeff")));
    return e;
}

// ---------------------------------------------------------------------------
// text and LaTeX

inline std::string basis_latex(Basis b) { return b == Basis::S ? "\\mathcal{S}" : basis_label(b); }

/// Aligned grid with row and column labels.
inline std::string to_text(const TransitionMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"M(" + basis_label(m.from) + "," + basis_label(m.to) + ")"};
    for (const auto& c : m.cols) header.push_back(c.str());
    cells.push_back(std::move(header));
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        std::vector<std::string> r{m.rows[i].str()};
        for (const auto& e : m.entries[i]) r.push_back(e.str());
        cells.push_back(std::move(r));
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& r : cells)
        for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
    std::ostringstream os;
    for (const auto& r : cells) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) os << "  ";
            os << r[j] << std::string(width[j] - r[j].size(), ' ');
        }
        os << '\n';
    }
    std::string s = os.str();
    // trailing blanks from padding the last column
    std::string out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + '\n';
    }
    return out;
}

inline std::string to_latex(const TransitionMatrix& m) {
    std::ostringstream os;
    os << "\\[ M(" << basis_latex(m.from) << "," << basis_latex(m.to) << ") = \\bordermatrix{%\n&";
    for (std::size_t j = 0; j < m.cols.size(); ++j) os << (j ? " & " : " ") << m.cols[j].str();
    os << " \\cr\n";
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        os << m.rows[i].str();
        for (const auto& e : m.entries[i]) os << " & " << e.str(true);
        os << (i + 1 < m.rows.size() ? " \\cr\n" : "\n");
    }
    os << "}. \\]\n";
    return os.str();
}

inline std::string to_text(const QSymExpansion& e) {
    if (e.terms.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [k, c] : e.terms) os << basis_label(e.basis) << "_" << k.str() << ": " << c.str() << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// shape syntax

struct ParsedParts {
    std::vector<int> parts;
    bool shorthand = false;
};

/// "3.2.1" or, as shorthand, "321" (single-digit parts only). "0" and ""
/// give the empty sequence.
inline ParsedParts parse_parts(std::string_view text) {
    ParsedParts out;
    if (text.empty() || text == "0") return out;
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '.')
            throw std::invalid_argument("malformed parts '" + std::string(text) + "'");
    if (text.find('.') == std::string_view::npos && text.size() > 1) {
        out.shorthand = true;
        for (char ch : text) out.parts.push_back(ch - '0');
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t dot = text.find('.', start);
            const std::string_view piece = text.substr(start, dot == std::string_view::npos ? text.size() - start : dot - start);
            if (piece.empty() || piece.size() > 6) throw std::invalid_argument("malformed parts '" + std::string(text) + "'");
            out.parts.push_back(std::stoi(std::string(piece)));
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
    }
    for (int p : out.parts)
        if (p <= 0) throw std::invalid_argument("parts must be positive in '" + std::string(text) + "'");
    return out;
}

struct ParsedShape {
    SkewShape shape;
    bool shorthand = false;
};

/// "a.b.c/d.e"; the inner shape is optional.
inline ParsedShape parse_shape(std::string_view text) {
    const std::size_t slash = text.find('/');
    const ParsedParts outer = parse_parts(text.substr(0, slash));
    ParsedParts inner;
    if (slash != std::string_view::npos) inner = parse_parts(text.substr(slash + 1));
    return {SkewShape(Partition(outer.parts), Partition(inner.parts)), outer.shorthand || inner.shorthand};
}

}  // namespace hltrans::io

#endif  // HLTRANS_IO_HPP
