#pragma once

// Everything except the CLI dispatcher (ferrers/cli.hpp).

#include "bipartite_graph.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "graph_io.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "spectral.hpp"
#include "structured.hpp"
#include "tree_count.hpp"
#include "verifier.hpp"
