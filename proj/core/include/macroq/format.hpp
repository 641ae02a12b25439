// Locale-independent number formatting shared by every CSV/JSON writer.

#pragma once

#include <locale>
#include <ostream>
#include <stdexcept>
#include <string>

namespace macroq {

inline constexpr int kSignificantDigits = 12;

/// Shortest "%.12g"-equivalent rendering, independent of the C locale.
std::string format_number(double value, int significant_digits = kSignificantDigits);

/// Rounds to `significant_digits` so JSON writers emit the same text as CSV.
double round_significant(double value, int significant_digits = kSignificantDigits);

/// Imbues the classic locale for the lifetime of the guard so integers are
/// never grouped, whatever the caller's stream locale.
class ClassicLocaleGuard {
 public:
  explicit ClassicLocaleGuard(std::ostream& os) : os_(os), saved_(os.imbue(std::locale::classic())) {}
  ~ClassicLocaleGuard() { os_.imbue(saved_); }
  ClassicLocaleGuard(const ClassicLocaleGuard&) = delete;
  ClassicLocaleGuard& operator=(const ClassicLocaleGuard&) = delete;

 private:
  std::ostream& os_;
  std::locale saved_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace macroq
