#pragma once

namespace twtie {

// Execution mode for the heavy subset-enumeration oracles. Every kernel has
// a serial reference path and an OpenMP path over the same per-item
// computation; results are merged with a total order, so both modes return
// identical values. The serial path is kept for testing and benchmarking.
enum class Exec { Serial, Parallel };

}  // namespace twtie
