#include <gpm/io.hpp>

#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include <gpm/errors.hpp>

namespace gpm
{

using nlohmann::ordered_json;

std::string to_json(const MatrixDocument &doc)
{
    ordered_json j;
    j["kind"] = doc.kind;
    j["q"] = doc.q ? ordered_json(*doc.q) : ordered_json(nullptr);
    j["phi"] = doc.phi ? ordered_json(doc.phi->to_string()) : ordered_json(nullptr);
    j["size"] = doc.matrix.size();
    ordered_json rows = ordered_json::array();
    for (Index n = 0; n < doc.matrix.size(); ++n) {
        ordered_json row = ordered_json::array();
        for (Index m = 0; m <= n; ++m) {
            row.push_back(doc.matrix(n, m).to_string());
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

MatrixDocument matrix_document_from_json(const std::string &text)
{
    try {
        const auto j = ordered_json::parse(text);
        MatrixDocument doc;
        doc.kind = j.at("kind").get<std::string>();
        if (!j.at("q").is_null()) {
            doc.q = j.at("q").get<std::int64_t>();
        }
        if (!j.at("phi").is_null()) {
            doc.phi = Rational::parse(j.at("phi").get<std::string>());
        }
        const auto size = j.at("size").get<std::size_t>();
        const auto &rows_json = j.at("rows");
        if (rows_json.size() != size) {
            throw ParseError("matrix document: size does not match row count");
        }
        std::vector<std::vector<Rational>> rows;
        rows.reserve(size);
        for (const auto &r : rows_json) {
            std::vector<Rational> row;
            row.reserve(r.size());
            for (const auto &e : r) {
                row.push_back(Rational::parse(e.get<std::string>()));
            }
            rows.push_back(std::move(row));
        }
        doc.matrix = TriangularMatrix::from_rows(rows);
        return doc;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("matrix document: ") + e.what());
    } catch (const SizeMismatch &e) {
        throw ParseError(std::string("matrix document: ") + e.what());
    }
}

std::string to_csv(const TriangularMatrix &m)
{
    std::ostringstream out;
    for (Index n = 0; n < m.size(); ++n) {
        for (Index k = 0; k <= n; ++k) {
            if (k > 0) {
                out << ',';
            }
            out << m(n, k).to_string();
        }
        out << '\n';
    }
    return out.str();
}

TriangularMatrix matrix_from_csv(const std::string &text)
{
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(Rational::parse(cell));
        }
        rows.push_back(std::move(row));
    }
    try {
        return TriangularMatrix::from_rows(rows);
    } catch (const SizeMismatch &e) {
        throw ParseError(std::string("csv: ") + e.what());
    }
}

std::string to_pbm(const TriangularMatrix &m)
{
    std::string out = "P1\n" + std::to_string(m.size()) + " " + std::to_string(m.size()) + "\n";
    for (Index n = 0; n < m.size(); ++n) {
        for (Index k = 0; k < m.size(); ++k) {
            out += (k <= n && !m(n, k).is_zero()) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Report &report)
{
    ordered_json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass;
    if (report.counterexample) {
        ordered_json ce = ordered_json::object();
        for (const auto &[key, value] : *report.counterexample) {
            ce[key] = value;
        }
        j["counterexample"] = std::move(ce);
    } else {
        j["counterexample"] = nullptr;
    }
    j["checked"] = report.checked;
    return j.dump();
}

std::string to_json(const PhiCoordinates &coords)
{
    ordered_json j = ordered_json::object();
    for (const auto &[q, beta] : coords) {
        j[std::to_string(q)] = beta.to_string();
    }
    return j.dump();
}

std::string series_to_json(const Polynomial &p, std::size_t max_degree)
{
    ordered_json j = ordered_json::array();
    for (std::size_t k = 0; k <= max_degree; ++k) {
        j.push_back(p.coeff(k).to_string());
    }
    return j.dump();
}

} // namespace gpm
