#ifndef QUIVERHH_IO_HPP
#define QUIVERHH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "quiverhh/field.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

struct QuiverFile {
    BoundQuiver quiver;
    Field field;
};

/*
 * Grammar (see README):
 *   vertices: <label> ...
 *   arrows: <label>: <label> -> <label>, ...
 *   relations: <label> <label>, ...
 *   char: <0 or prime>
 * Entries are separated by commas or newlines, `#` comments run to end of
 * line, and each section appears at most once, in any order.
 */
QuiverFile parse_quiver(const std::string& text);
QuiverFile load_quiver(const std::filesystem::path& path);

/// Canonical text; parse_quiver(emit_quiver(q)) reproduces q.
std::string emit_quiver(const BoundQuiver& bq, const Field& field = Field::rationals());

}  // namespace quiverhh

#endif
