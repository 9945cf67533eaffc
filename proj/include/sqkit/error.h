#pragma once
#include <stdexcept>
#include <string>

namespace sqkit {

/* Base for all failures surfaced by the library; the CLI maps these to exit code 2. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Text-input failure carrying a position. Line and column are 1-based; 0 = unknown. */
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : Error(locate(msg, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string locate(const std::string& msg, int line, int column) {
        if (line <= 0)
            return msg;
        std::string s = "line " + std::to_string(line);
        if (column > 0)
            s += ", column " + std::to_string(column);
        return s + ": " + msg;
    }
    int line_;
    int column_;
};

}  // namespace sqkit
