#pragma once

#include <cstddef>
#include <functional>

// Shared data-parallel kernel driver: an OpenMP parallel-for plus a serial
// reference twin kept for testing. Bodies must be independent across indices
// and write only to their own slot.

namespace charlier {

enum class ExecMode { serial, parallel };

void for_each_index_serial(std::size_t count, const std::function<void(std::size_t)>& body);
void for_each_index_parallel(std::size_t count, int workers,
                             const std::function<void(std::size_t)>& body);
void for_each_index(std::size_t count, ExecMode mode, int workers,
                    const std::function<void(std::size_t)>& body);

}  // namespace charlier
