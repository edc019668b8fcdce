// Minimal logger with an slf4j-style "{}" API. Messages below the
// threshold (info) are dropped.
#pragma once

#include <chrono>
#include <ctime>
#include <iostream>
#include <sstream>
#include <string>

namespace fixture {

enum class Level { Trace, Debug, Info, Warn, Error, Fatal };

class Logger {
public:
    explicit Logger(std::string name) : name_(std::move(name)) {}

    template <typename... Args> void trace(const std::string& fmt, const Args&... args) const { write(Level::Trace, "TRACE", fmt, args...); }
    template <typename... Args> void debug(const std::string& fmt, const Args&... args) const { write(Level::Debug, "DEBUG", fmt, args...); }
    template <typename... Args> void info(const std::string& fmt, const Args&... args) const { write(Level::Info, "INFO", fmt, args...); }
    template <typename... Args> void warn(const std::string& fmt, const Args&... args) const { write(Level::Warn, "WARN", fmt, args...); }
    template <typename... Args> void error(const std::string& fmt, const Args&... args) const { write(Level::Error, "ERROR", fmt, args...); }
    template <typename... Args> void fatal(const std::string& fmt, const Args&... args) const { write(Level::Fatal, "FATAL", fmt, args...); }

private:
    static constexpr Level threshold = Level::Info;
    std::string name_;

    template <typename... Args>
    void write(Level level, const char* tag, const std::string& fmt, const Args&... args) const {
        if (level < threshold) {
            return;
        }
        std::ostringstream body;
        format(body, fmt, 0, args...);
        std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%d %H:%M:%S", std::localtime(&now));
        std::cout << stamp << " " << tag << " [main] " << name_ << " - " << body.str() << std::endl;
    }

    static void format(std::ostringstream& out, const std::string& fmt, std::size_t pos) {
        out << fmt.substr(pos);
    }

    template <typename T, typename... Rest>
    static void format(std::ostringstream& out, const std::string& fmt, std::size_t pos, const T& value, const Rest&... rest) {
        std::size_t at = fmt.find("{}", pos);
        if (at == std::string::npos) {
            out << fmt.substr(pos);
            return;
        }
        out << fmt.substr(pos, at - pos) << value;
        format(out, fmt, at + 2, rest...);
    }
};

}  // namespace fixture
