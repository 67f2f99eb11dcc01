#pragma once

namespace dunkl {

/// Name of the environment variable holding the worker thread count.
inline constexpr const char* kThreadsEnv = "DUNKL_THREADS";

/// Applies DUNKL_THREADS when set to a positive integer; returns the count in effect.
int configure_threads_from_env();

}  // namespace dunkl
