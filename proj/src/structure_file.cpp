#include "plectic/structure_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace plectic {

StructureFileError::StructureFileError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

const Cotensor* StructureFile::find(std::string_view name) const {
    for (const auto& [k, v] : cotensors)
        if (k == name) return &v;
    return nullptr;
}

bool StructureFile::operator==(const StructureFile& o) const {
    return vars == o.vars && n == o.n && degree_bound == o.degree_bound && omega == o.omega && cotensors == o.cotensors;
}

namespace {

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_blank(std::string_view s, std::size_t i) {
    while (i < s.size() && is_blank(s[i])) ++i;
    return i;
}

std::size_t word_end(std::string_view s, std::size_t i) {
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return i;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
    StructureFile out;
    bool have_vars = false, have_n = false, have_omega = false;
    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        std::size_t i = skip_blank(line, 0);
        if (i == line.size()) continue;

        auto col = [](std::size_t p) { return static_cast<int>(p) + 1; };
        std::size_t ke = word_end(line, i);
        if (ke == i) throw StructureFileError(lineno, col(i), "expected a keyword");
        std::string key(line.substr(i, ke - i));
        std::string name;
        std::size_t p = skip_blank(line, ke);
        if (key == "cotensor") {
            std::size_t ne = word_end(line, p);
            if (ne == p) throw StructureFileError(lineno, col(p), "expected a cotensor name");
            name = std::string(line.substr(p, ne - p));
            p = skip_blank(line, ne);
        }
        if (p >= line.size() || line[p] != '=') throw StructureFileError(lineno, col(p), "expected '='");
        const std::size_t vstart = skip_blank(line, p + 1);
        std::string_view value = line.substr(vstart);
        while (!value.empty() && is_blank(value.back())) value.remove_suffix(1);

        auto integer = [&](int min) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw StructureFileError(lineno, col(vstart), "expected an integer");
            if (v < min) throw StructureFileError(lineno, col(vstart), key + " is out of range");
            return v;
        };
        auto cotensor = [&]() {
            if (!have_vars) throw StructureFileError(lineno, col(i), "vars must be given before " + key);
            if (value.empty()) return Cotensor(out.vars);
            try {
                return Cotensor::parse(out.vars, value);
            } catch (const ParseError& e) {
                throw StructureFileError(lineno, col(vstart) + e.column() - 1, e.what());
            }
        };

        if (key == "vars") {
            if (have_vars) throw StructureFileError(lineno, col(i), "vars given twice");
            out.vars = integer(0);
            if (out.vars > kMaxVars) throw StructureFileError(lineno, col(vstart), "too many variables");
            have_vars = true;
        } else if (key == "n") {
            if (have_n) throw StructureFileError(lineno, col(i), "n given twice");
            out.n = integer(0);
            have_n = true;
        } else if (key == "degree_bound") {
            out.degree_bound = integer(0);
        } else if (key == "omega") {
            if (have_omega) throw StructureFileError(lineno, col(i), "omega given twice");
            out.omega = cotensor();
            have_omega = true;
            if (!have_n) throw StructureFileError(lineno, col(i), "n must be given before omega");
            auto r = out.omega.ranks();
            if (!r.empty() && (r.size() != 1 || r.front() != out.n + 1))
                throw StructureFileError(lineno, col(vstart), "omega must have form degree n+1");
        } else if (key == "cotensor") {
            if (out.find(name)) throw StructureFileError(lineno, col(i), "duplicate cotensor name '" + name + "'");
            out.cotensors.emplace_back(name, cotensor());
        } else {
            throw StructureFileError(lineno, col(i), "unknown keyword '" + key + "'");
        }
    }
    if (!have_vars) throw StructureFileError(lineno, 1, "missing vars");
    if (!have_n) throw StructureFileError(lineno, 1, "missing n");
    if (!have_omega) out.omega = Cotensor(out.vars);
    return out;
}

StructureFile load_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open structure file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

std::string print_structure(const StructureFile& s) {
    std::ostringstream o;
    o << "vars = " << s.vars << "\n";
    o << "n = " << s.n << "\n";
    o << "degree_bound = " << s.degree_bound << "\n";
    o << "omega = " << (s.omega.is_zero() ? "" : s.omega.str()) << "\n";
    for (const auto& [name, c] : s.cotensors) o << "cotensor " << name << " = " << c.str() << "\n";
    return o.str();
}

}  // namespace plectic
