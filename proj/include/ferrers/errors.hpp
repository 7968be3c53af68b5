#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

/// Root of every error thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed text, wrong dimensions, caps. The CLI maps
/// these to exit code 2.
struct input_error : error {
  using error::error;
};

struct format_error : input_error {
  using input_error::input_error;
};

struct dimension_error : input_error {
  using input_error::input_error;
};

struct invalid_partition : input_error {
  using input_error::input_error;
};

struct cap_exceeded : input_error {
  using input_error::input_error;
};

struct disconnected_graph : input_error {
  using input_error::input_error;
};

struct degree_zero : input_error {
  using input_error::input_error;
};

struct empty_set : input_error {
  using input_error::input_error;
};

struct singular_matrix : error {
  using error::error;
};

struct not_symmetric : error {
  using error::error;
};

struct not_a_projection : error {
  using error::error;
};

struct non_convergence : error {
  using error::error;
};

/// An exact identity or inequality that must hold for every connected
/// bipartite graph failed. Always means a bug (or injected fault).
struct identity_violation : error {
  using error::error;
};

}  // namespace ferrers
