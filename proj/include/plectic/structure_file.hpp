#ifndef PLECTIC_STRUCTURE_FILE_HPP
#define PLECTIC_STRUCTURE_FILE_HPP

#include "plectic/nplectic.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plectic {

// Text form of an n-plectic structure plus named cotensors:
//
//   vars = 6
//   n = 3
//   degree_bound = 4
//   omega = dx1^dx3^dx5^dx6 + dx2^dx4^dx5^dx6
//   cotensor f1 = (x1^2*x3 - x4) dx5^dx6
//
// '#' starts a comment. vars must precede omega and the cotensors.
struct StructureFile {
    int vars = 0;
    int n = 1;
    int degree_bound = 4;
    Cotensor omega;
    std::vector<std::pair<std::string, Cotensor>> cotensors;

    NPlecticStructure structure() const { return NPlecticStructure(vars, n, omega, degree_bound); }
    const Cotensor* find(std::string_view name) const;
    bool operator==(const StructureFile& o) const;
};

class StructureFileError : public std::runtime_error {
public:
    StructureFileError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

StructureFile parse_structure(std::string_view text);
StructureFile load_structure(const std::string& path);
std::string print_structure(const StructureFile& s);

}  // namespace plectic

#endif
