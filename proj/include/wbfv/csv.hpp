#ifndef WBFV_CSV_HPP
#define WBFV_CSV_HPP

#include <string>
#include <vector>

namespace wbfv {

// Round-trip exact decimal formatting (17 significant digits).
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace wbfv

#endif
