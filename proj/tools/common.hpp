#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wcli {

// exit codes shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitNoConvergence = 4;

struct OutputOptions {
    std::string format = "csv";  // csv | json
    std::string out_path;        // empty: stdout
    double tol = 1e-15;          // target accuracy epsilon
};

// shortest decimal representation that round-trips to the same double
std::string format_double(double v);

// same, but non-finite values become null (JSON has no inf/nan literals)
std::string json_number(double v);

// "a", "a,b,c" or "start:step:stop" (stop inclusive within half a step)
std::vector<double> parse_value_list(const std::string& text);

// Buffered table emitter, CSV ('.' decimal, ',' separator, LF) or a JSON
// array of objects with the column names as keys.
class TableWriter {
  public:
    TableWriter(std::vector<std::string> columns, const OutputOptions& opts);
    void add_row(const std::vector<double>& values);
    // writes everything; returns false when the output file cannot be opened
    bool finish();

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    OutputOptions opts_;

    void write_to(std::ostream& os) const;
};

}  // namespace wcli
