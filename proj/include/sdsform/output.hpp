/* output.hpp
 *
 * CSV and text emission.  All numbers go through one printf("%.17g")
 * formatter so identical runs produce byte-identical files; writes go
 * to a temp file in the target directory followed by a rename.
 */
#ifndef SDSFORM_OUTPUT_HPP
#define SDSFORM_OUTPUT_HPP

#include <initializer_list>
#include <string>
#include <vector>

namespace sdsform {

std::string g17(double v);

void write_text_atomic(const std::string& path, const std::string& content);

/* header + rows of preformatted cells; commas and newlines added here */
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::vector<std::string> num_row(std::initializer_list<double> vals);

}  // namespace sdsform

#endif
