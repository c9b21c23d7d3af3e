#pragma once
#include <cstdint>

#include <omp.h>

namespace twistlab {

// Runs body(i) for i in [0, n).  jobs <= 1 takes the plain serial path; any
// other value fans out over OpenMP.  Callers write results into per-index
// slots and fold them in index order afterwards, so the output is identical
// for every jobs value.  body must not let exceptions escape.
template <class F>
void parallel_for(std::int64_t n, int jobs, F&& body) {
  if (jobs <= 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int default_jobs() { return omp_get_max_threads(); }

}  // namespace twistlab
