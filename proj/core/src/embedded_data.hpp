#ifndef QHCP_EMBEDDED_DATA_HPP
#define QHCP_EMBEDDED_DATA_HPP

#include <string_view>
#include <vector>

namespace qhcp::detail {

/// Contents of core/data/*.txt, compiled in.
const std::vector<std::string_view>& embedded_data_files();

}  // namespace qhcp::detail

#endif  // QHCP_EMBEDDED_DATA_HPP
