#include "mtcomb/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace mtcomb {

static std::vector<int> parse_int_list(const std::string& s, const char* what,
                                       int line) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            std::ostringstream os;
            os << what << ": line " << line << ": bad integer '" << tok << "'";
            throw std::invalid_argument(os.str());
        }
    }
    return out;
}

std::string format_triangle(const MonotoneTriangle& T) { return T.to_string(); }

MonotoneTriangle parse_triangle(const std::string& text) {
    std::vector<std::vector<int>> rowvals;
    std::string row;
    std::istringstream is(text);
    while (std::getline(is, row, ';'))
        rowvals.push_back(parse_int_list(row, "triangle",
                                         static_cast<int>(rowvals.size()) + 1));
    while (!rowvals.empty() && rowvals.back().empty()) rowvals.pop_back();
    int n = static_cast<int>(rowvals.size()) + 1;
    std::vector<Subset> rows;
    rows.push_back(Subset::empty(n));
    for (int m = 1; m <= n - 1; ++m) {
        if (static_cast<int>(rowvals[m - 1].size()) != m)
            throw std::invalid_argument("triangle: row " + std::to_string(m) +
                                        " must have " + std::to_string(m) + " entries");
        for (int v : rowvals[m - 1])
            if (v < 1 || v > n)
                throw std::invalid_argument("triangle: row " + std::to_string(m) +
                                            ": entry " + std::to_string(v) +
                                            " outside [1," + std::to_string(n) + "]");
        rows.push_back(Subset::of(n, rowvals[m - 1]));
        if (rows.back().cardinality() != m)
            throw std::invalid_argument("triangle: row " + std::to_string(m) +
                                        " has repeated entries");
    }
    rows.push_back(Subset::full(n));
    return MonotoneTriangle(std::move(rows));  // ctor enforces interlacing
}

std::string format_asm(const AsmMatrix& A) { return A.to_string(); }

AsmMatrix parse_asm(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::string line;
    std::istringstream is(text);
    while (std::getline(is, line)) {
        auto vals = parse_int_list(line, "asm", static_cast<int>(rows.size()) + 1);
        if (!vals.empty()) rows.push_back(std::move(vals));
    }
    int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("asm: line " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(n));
    return AsmMatrix(std::move(rows));  // ctor enforces the alternating rule
}

std::string format_permutation(const Permutation& w) {
    std::ostringstream os;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) os << ' ';
        os << w[i];
    }
    return os.str();
}

Permutation parse_permutation(const std::string& text) {
    return Permutation(parse_int_list(text, "permutation", 1));
}

nlohmann::json triangle_to_json(const MonotoneTriangle& T) {
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 1; m <= T.n - 1; ++m) rows.push_back(T.rows[m].elements());
    return {{"n", T.n}, {"rows", rows}};
}

MonotoneTriangle triangle_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<Subset> rows;
    rows.push_back(Subset::empty(n));
    for (const auto& r : j.at("rows"))
        rows.push_back(Subset::of(n, r.get<std::vector<int>>()));
    rows.push_back(Subset::full(n));
    if (static_cast<int>(rows.size()) != n + 1)
        throw std::invalid_argument("triangle json: wrong number of rows");
    return MonotoneTriangle(std::move(rows));
}

nlohmann::json asm_to_json(const AsmMatrix& A) {
    return {{"n", A.n}, {"entries", A.entries}};
}

AsmMatrix asm_from_json(const nlohmann::json& j) {
    auto e = j.at("entries").get<std::vector<std::vector<int>>>();
    AsmMatrix A{std::vector<std::vector<int>>(e)};
    if (A.n != j.at("n").get<int>())
        throw std::invalid_argument("asm json: size mismatch");
    return A;
}

}  // namespace mtcomb
