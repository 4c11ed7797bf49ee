#ifndef TLAB_TLAB_HPP
#define TLAB_TLAB_HPP

#include "tlab/dag.hpp"
#include "tlab/error.hpp"
#include "tlab/exact.hpp"
#include "tlab/graph.hpp"
#include "tlab/io.hpp"
#include "tlab/ml.hpp"
#include "tlab/reach.hpp"
#include "tlab/reductions.hpp"
#include "tlab/steiner.hpp"
#include "tlab/temporal_graph.hpp"

#endif  // TLAB_TLAB_HPP
